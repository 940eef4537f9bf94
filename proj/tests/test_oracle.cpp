#include <doctest.h>

#include "family.hpp"
#include "oracle.hpp"

using namespace sforge;

namespace {

const FieldTag Q = FieldTag::rationals();
Poly P(const char* s) { return Poly::parse(Q, s); }

DivisorInstance worked(int d) {
    FamilyParams p;
    p.d = d;
    p.f1 = Poly::parse(Q, "1", 2);
    p.f2 = Poly::parse(Q, "x^2 + x*y + y^2", 2);
    return build_divisor(p);
}

}  // namespace

TEST_CASE("ideal dimensions") {
    CHECK(ideal_dim({P("x"), P("y"), P("z")}, 1) == 3);
    CHECK(ideal_dim({P("x^2")}, 3) == 3);
    CHECK(ideal_dim(jacobian_generators(worked(5).f), 4) == 3);
    CHECK(hilbert_function_quotient({P("x^2")}, 0) == 1);
}

TEST_CASE("rank stability") {
    Poly f = build_divisor(random_instance(7, 1, 0, 2, Q)).f;
    std::vector<Poly> grad{f.partial(X), f.partial(Y), f.partial(Z)};
    for (int t = 0; t <= 12; ++t) CHECK(ideal_dim(grad, t) == ideal_dim(jacobian_generators(f), t));
}

TEST_CASE("Hilbert function stabilizes at the multiplicity") {
    auto r5 = resolution_check(worked(5).f, 9);
    CHECK(r5.pass);
    CHECK(r5.stabilized == 12);
    auto r6 = resolution_check(worked(6).f, 12);
    CHECK(r6.pass);
    CHECK(r6.stabilized == 19);
    CHECK(predicted_multiplicity(7) == 27);
    CHECK(predicted_multiplicity(10) == 61);
}

TEST_CASE("syzygies") {
    Poly f = worked(5).f;
    auto k1 = syzygy_kernel(f, 1);
    REQUIRE(k1.basis.size() == 1);
    Syzygy euler{{P("x"), P("y"), P("z"), P("-5")}};
    Vector target = syzygy_vector(euler, 1), got = syzygy_vector(k1.basis[0], 1);
    EchelonSpan span(Q, got.size());
    span.insert(got);
    CHECK(span.contains(target));

    auto fresh5 = fresh_syzygies(f, 2);
    CHECK_FALSE(fresh5.empty());

    auto fresh6 = fresh_syzygies(worked(6).f, 3);
    std::vector<int> degs;
    for (const auto& s : fresh6) degs.push_back(s.degree);
    CHECK(degs == std::vector<int>{2, 3});

    auto again = syzygy_kernel(f, 2);
    auto once = syzygy_kernel(f, 2);
    REQUIRE(again.basis.size() == once.basis.size());
    for (std::size_t i = 0; i < once.basis.size(); ++i)
        CHECK(syzygy_vector(again.basis[i], 2) == syzygy_vector(once.basis[i], 2));
}

TEST_CASE("point support") {
    auto r = point_support_check(worked(5).f, 8);
    CHECK(r.certified);
    REQUIRE(r.n.has_value());
    CHECK(*r.n <= 8);
    CHECK_FALSE(point_support_check(P("x*y*z"), 8).certified);
    CHECK(ideal_contains(jacobian_generators(worked(5).f), Poly(Q)));
}

TEST_CASE("freeness probe") {
    auto ok = freeness_probe(worked(5).f, 9);
    CHECK(ok.success);
    CHECK(ok.column_degrees == std::vector<int>{1, 2, 2});
    auto fermat = freeness_probe(P("x^5 + y^5 + z^5"), 9);
    CHECK_FALSE(fermat.success);
}
