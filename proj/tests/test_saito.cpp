#include <doctest.h>

#include "family.hpp"
#include "oracle.hpp"
#include "saito.hpp"
#include "support.hpp"

using namespace sforge;

namespace {

const FieldTag Q = FieldTag::rationals();
const FieldTag F1009 = FieldTag::prime(1009);

DivisorInstance worked(int d) {
    FamilyParams p;
    p.d = d;
    p.f1 = Poly::parse(Q, "1", 2);
    p.f2 = Poly::parse(Q, "x^2 + x*y + y^2", 2);
    return build_divisor(p);
}

DivisorInstance random_divisor(int d, int a, int b, std::uint64_t seed, FieldTag k = F1009) {
    return build_divisor(random_instance(d, a, b, seed, k));
}

bool proportional(const std::array<Poly, 3>& u, const std::array<Poly, 3>& w) {
    // u = c w for some nonzero c
    std::optional<Scalar> c;
    for (int i = 0; i < 3; ++i) {
        if (u[i].is_zero() != w[i].is_zero()) return false;
        if (w[i].is_zero()) continue;
        Scalar r = u[i].leading().second / w[i].leading().second;
        if (c && *c != r) return false;
        c = r;
        if (u[i] != r * w[i]) return false;
    }
    return c.has_value() && !c->is_zero();
}

}  // namespace

TEST_CASE("graded system on the d=5 instance") {
    auto inst = worked(5);
    auto sys = build_graded_system(inst.params, Scalar::one(Q));
    CHECK(sys.rows[0][0] == Poly::constant(Q, 5, 2));
    CHECK(sys.rows[0][1].is_zero());
    CHECK(sys.rows[0][2].is_zero());
    CHECK(sys.rows[1][2] == Poly::parse(Q, "y^2", 2));
    CHECK(sys.rhs[0] == Poly::parse(Q, "y^2", 2));
    CHECK(sys.rhs[1] == Poly::parse(Q, "-x^4", 2));

    auto sol = solve_graded_system(sys);
    CHECK(sol.h1 == Poly::parse(Q, "1/5*y^2", 2));
    auto res = apply_graded_rows(sys, {sol.h1, sol.h3, sol.h5});
    CHECK(res[0] == sys.rhs[0]);
    CHECK(res[1] == sys.rhs[1]);
    REQUIRE(sol.kernel.size() == 1);
    CHECK(proportional(sol.kernel[0], graded_syzygy_generator(inst.params)));

    const long want[] = {1, 2, 1, 0, 0};
    for (int i = 0; i < 5; ++i) CHECK(graded_module_hilbert(inst.params, i) == want[i]);
    CHECK_THROWS(build_graded_system(worked(6).params, Scalar::one(Q)));
}

TEST_CASE("graded system over odd degrees") {
    for (int d : {5, 7, 9, 11, 13})
        for (auto [a, b] : legal_pairs(d)) {
            auto inst = random_divisor(d, a, b, 5);
            auto c = compute_constants(inst.params);
            auto sys = build_graded_system(inst.params, c.mu);
            auto sol = solve_graded_system(sys);
            auto res = apply_graded_rows(sys, {sol.h1, sol.h3, sol.h5});
            REQUIRE(res[0] == sys.rhs[0]);
            REQUIRE(res[1] == sys.rhs[1]);
            REQUIRE(sol.kernel.size() == 1);
            auto gen = graded_syzygy_generator(inst.params);
            REQUIRE(proportional(sol.kernel[0], gen));
            auto zero = apply_graded_rows(sys, gen);
            REQUIRE(zero[0].is_zero());
            REQUIRE(zero[1].is_zero());
            int v = inst.params.v();
            for (int i = 0; i <= 2 * v + 3; ++i) {
                REQUIRE(graded_module_hilbert(inst.params, i) == graded_module_hilbert_series(inst.params, i));
                if (i >= 2 * v - 1) REQUIRE(graded_module_hilbert(inst.params, i) == 0);
            }
        }
}

TEST_CASE("explicit route, beta = 0") {
    auto inst = worked(5);
    auto m = build_saito_matrix(inst);
    CHECK(m.route == Route::ExplicitBetaZero);
    auto rep = verify_saito(inst.f, m.columns);
    CHECK(rep.pass);
    CHECK(m.columns[0] == PolyColumn{Poly::parse(Q, "x"), Poly::parse(Q, "y"), Poly::parse(Q, "z")});
    REQUIRE(rep.quotients[0].has_value());
    CHECK(*rep.quotients[0] == Poly::constant(Q, 5));
    CHECK(det3(m.normalized()[0], m.normalized()[1], m.normalized()[2]) == inst.f);
}

TEST_CASE("explicit route, beta >= 1: column identities") {
    for (auto k : {F1009, Q}) {
        auto inst = random_divisor(7, 0, 1, 9, k);
        auto m = build_saito_matrix(inst, RouteChoice::Explicit);
        CHECK(m.route == Route::ExplicitOdd);
        REQUIRE(m.ingredients.has_value());
        const auto& ing = *m.ingredients;
        CHECK(check_second_column(inst, ing).is_zero());
        auto e4 = check_third_column(inst, ing);
        CHECK(e4.zero());
        CHECK(e4.h6_relation.is_zero());
        CHECK(e4.g_identity.is_zero());
        CHECK(ing.g1 * ing.h4 == ing.g2 * ing.h2);
        CHECK(verify_saito(inst.f, m.columns).pass);

        Ingredients bumped = ing;
        bumped.g3 += Poly::constant(k, 1);
        CHECK_FALSE(check_second_column(inst, bumped).is_zero());
    }
}

TEST_CASE("identity matrix fails the criterion") {
    auto inst = worked(5);
    PolyColumn e0{Poly::constant(Q, 1), Poly(Q), Poly(Q)};
    PolyColumn e1{Poly(Q), Poly::constant(Q, 1), Poly(Q)};
    PolyColumn e2{Poly(Q), Poly(Q), Poly::constant(Q, 1)};
    auto rep = verify_saito(inst.f, {e0, e1, e2});
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.det_residual.is_zero());
}

TEST_CASE("scalar perturbation of any ingredient is detected") {
    std::mt19937_64 rng(21);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {0, 0}, {0, 2}, {1, 1}}) {
        int d = a + b <= 1 ? 7 : 9;
        auto inst = random_divisor(d, a, b, 13);
        auto m = build_saito_matrix(inst, RouteChoice::Explicit);
        REQUIRE(m.ingredients.has_value());
        Poly Ingredients::*fields[] = {&Ingredients::g1, &Ingredients::g2, &Ingredients::g3,
                                       &Ingredients::h1, &Ingredients::h2, &Ingredients::h3,
                                       &Ingredients::h4, &Ingredients::h5, &Ingredients::h6};
        for (auto field : fields) {
            Ingredients ing = *m.ingredients;
            if ((ing.*field).is_zero()) continue;
            Scalar s = sforge::testing::random_nonzero(rng, F1009);
            if (s == Scalar::one(F1009)) s = Scalar(F1009, 2L);
            ing.*field = s * (ing.*field);
            bool col2 = check_second_column(inst, ing).is_zero();
            bool col3 = check_third_column(inst, ing).zero();
            bool det = verify_saito(inst.f, assemble_columns(inst.params, ing)).pass;
            CHECK_FALSE((col2 && col3 && det));
        }
    }
}

TEST_CASE("oracle route") {
    auto six = worked(6);
    auto m = build_saito_matrix(six);
    CHECK(m.route == Route::Oracle);
    auto rep = verify_saito(six.f, m.columns);
    CHECK(rep.pass);
    CHECK(rep.column_degrees == std::vector<int>{1, 2, 3});

    auto seven = random_divisor(7, 1, 0, 4);
    auto ex = build_saito_matrix(seven, RouteChoice::Explicit);
    auto orc = build_saito_matrix(seven, RouteChoice::Oracle);
    CHECK(verify_saito(seven.f, orc.columns).pass);
    auto degs = verify_saito(seven.f, ex.columns).column_degrees;
    for (int i = 0; i < 3; ++i) CHECK(in_kernel_span(seven.f, ex.columns[i], degs[i]));
}

TEST_CASE("even quadratic probe") {
    auto six = random_divisor(6, 0, 0, 2);
    auto r = probe_even_quadratic(six);
    CHECK(r.success);
    REQUIRE(r.columns.has_value());
    CHECK(verify_saito(six.f, *r.columns).pass);
}

TEST_CASE("beta = 0 constant is a point") {
    auto inst = random_divisor(9, 1, 0, 8);
    std::string set;
    auto a = solve_beta_zero_constant(inst, &set);
    CHECK(a.has_value());
    CHECK(set == "point");
}
