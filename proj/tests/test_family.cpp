#include <doctest.h>

#include <set>

#include "family.hpp"

using namespace sforge;

namespace {

const FieldTag Q = FieldTag::rationals();

FamilyParams params(int d, int alpha, int beta, const char* f1, const char* f2, FieldTag k = Q) {
    FamilyParams p;
    p.d = d;
    p.alpha = alpha;
    p.beta = beta;
    p.field = k;
    p.f1 = Poly::parse(k, f1, 2);
    p.f2 = Poly::parse(k, f2, 2);
    return p;
}

bool failed(const ValidationReport& r, const std::string& name) {
    for (const auto& c : r.conditions)
        if (c.name == name) return !c.pass;
    FAIL("no condition named " << name);
    return false;
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(params(5, 0, 0, "1", "x^2 + x*y + y^2")).ok());
    CHECK_FALSE(validate(params(5, 1, 0, "x + y", "x + y")).ok());

    auto r = validate(params(7, 0, 0, "1", "x^3"));
    CHECK_FALSE(r.ok());
    CHECK(failed(r, "x_not_divides_f2"));

    auto sq = validate(params(9, 2, 0, "x^2 + 2*x*y + y^2", "x^2 + y^2"));
    CHECK(failed(sq, "f1_squarefree"));
    CHECK(validate(params(9, 2, 0, "x^2 + 2*x*y + y^2", "x^2 + y^2"), false).ok());
}

TEST_CASE("build_divisor") {
    auto i5 = build_divisor(params(5, 0, 0, "1", "x^2 + x*y + y^2"));
    CHECK(i5.f == Poly::parse(Q, "x^5 + x^2*y^3 + x*y^4 + y^5 + y^4*z"));
    auto i6 = build_divisor(params(6, 0, 0, "1", "x^2 + x*y + y^2"));
    CHECK(i6.f == Poly::parse(Q, "x^6 + x^2*y^4 + x*y^5 + y^6 + y^5*z"));
    CHECK_THROWS_AS(build_divisor(params(5, 1, 0, "x + y", "x + y")), InvalidParams);
}

TEST_CASE("random instances") {
    FieldTag f1009 = FieldTag::prime(1009);
    for (int d = 5; d <= 13; ++d)
        for (auto [a, b] : legal_pairs(d))
            for (FieldTag k : {Q, f1009}) {
                FamilyParams p = random_instance(d, a, b, 17, k);
                DivisorInstance inst = build_divisor(p);
                REQUIRE(euler_check(inst.f) == Scalar(k, static_cast<long>(d)));
                REQUIRE(inst.f.partial(Z) == Poly::monomial(k, Monomial(b, d - b - 1)));
                REQUIRE(is_irreducible(inst));
                SupportInfo s = support_info(inst);
                REQUIRE(s.intervals_disjoint);
                REQUIRE(s.contained_in_family_support);
            }

    FamilyParams p = random_instance(7, 1, 0, 42, Q);
    CHECK(p.f1.size() == 2);
    CHECK_FALSE(p.f1.coeff(Monomial(0, 1)).is_zero());
    FamilyParams p5 = random_instance(5, 0, 0, 3, FieldTag::prime(101));
    CHECK(p5.f1.degree() == 0);
    CHECK_FALSE(p5.f2.coeff(Monomial(2, 0)).is_zero());
    CHECK_FALSE(p5.f2.coeff(Monomial(0, 2)).is_zero());
    FamilyParams again = random_instance(7, 1, 0, 42, Q);
    CHECK(again.f1 == p.f1);
    CHECK(again.f2 == p.f2);
}

TEST_CASE("legal pairs") {
    for (int d = 5; d <= 13; ++d) {
        std::set<std::pair<int, int>> want;
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= (d + 1) / 2 - 3; ++b) want.insert({a, b});
        auto got = legal_pairs(d);
        CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == want);
    }
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(Poly::parse(Q, "x^5 + x^2*y^3 + x*y^4 + y^5 + y^4*z")));
    CHECK_FALSE(is_irreducible(Poly::parse(Q, "x^2 + x*z")));
    CHECK_FALSE(is_irreducible(Poly::parse(Q, "x^2*y + x*y*z")));
}
