#include <doctest.h>

#include "poly.hpp"
#include "support.hpp"

using namespace sforge;
using sforge::testing::random_form;
using sforge::testing::random_nonzero;

namespace {

const FieldTag Q = FieldTag::rationals();
Poly P(const char* s, int nvars = 3) { return Poly::parse(Q, s, nvars); }

}  // namespace

TEST_CASE("parse") {
    Poly p = P("x^5 + y^4*z");
    CHECK(p.size() == 2);
    CHECK(p.coeff(Monomial(5, 0, 0)) == Scalar::one(Q));
    CHECK(p.coeff(Monomial(0, 4, 1)) == Scalar::one(Q));
    CHECK(P("2*x - 2*x").is_zero());
    CHECK(P("2*x - 2*x").to_string() == "0");
    CHECK(P("x^2*y^3 + x*y^4 + y^5") == P("y^3") * P("x^2 + x*y + y^2"));
    CHECK(P(" -3/7 * x ").to_string() == "-3/7*x");
    CHECK(P("y*x^2 - 4").to_string() == "x^2*y - 4");
    CHECK(P("x*x*y").to_string() == "x^2*y");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(P("x^"), SyntaxError);
    CHECK_THROWS_AS(P("x + + y"), SyntaxError);
    CHECK_THROWS_AS(P("3/0*x"), Error);
    CHECK_THROWS_AS(P("w^2"), UnknownVariable);
    CHECK_THROWS_AS(P("x*z", 2), UnknownVariable);
    try {
        P("x + * y");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("arithmetic") {
    CHECK(P("x") * P("x + y") == P("x^2 + x*y"));
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK(P("x^2 + x*y + y^2") * P("x - y") == P("x^3 - y^3"));
    CHECK(P("x + y").pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    FieldTag f7 = FieldTag::prime(7);
    CHECK(Poly::parse(f7, "x + y").pow(7) == Poly::parse(f7, "x^7 + y^7"));
}

TEST_CASE("partial derivatives") {
    CHECK(P("x^2*y^4*z").partial(Z) == P("x^2*y^4"));
    CHECK(P("y^5").partial(X).is_zero());
    CHECK(P("x^5 + x^2*y^3").partial(X) == P("5*x^4 + 2*x*y^3"));
}

TEST_CASE("euler check") {
    CHECK(euler_check(P("x^5 + y^4*z")) == Scalar(Q, 5L));
    CHECK(euler_check(P("x*y*z")) == Scalar(Q, 3L));
    CHECK(euler_check(P("x^5 + x^2*y^3 + x*y^4 + y^5 + y^4*z")) == Scalar(Q, 5L));
    CHECK_THROWS_AS(euler_check(P("x^2 + y")), EulerViolation);
}

TEST_CASE("divides") {
    CHECK_FALSE(divides(P("y"), P("x^5 + y^4*z")).has_value());
    auto q = divides(P("x"), P("x^2*y"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x*y"));
    auto r = divides(P("x^2 + x*y + y^2"), P("x^3 - y^3"));
    REQUIRE(r.has_value());
    CHECK(*r == P("x - y"));
    CHECK_FALSE(divides(P("x + y"), P("x^2 + y^2")).has_value());
    CHECK(divides(P("x + y"), P("0")) == P("0"));
}

TEST_CASE("square-free forms") {
    CHECK(is_squarefree_bivariate(P("x^3 + x^2*y", 2)) == false);
    CHECK(is_squarefree_bivariate(P("x^2*y + x*y^2", 2)));
    CHECK_FALSE(is_squarefree_bivariate(P("x^2 + 2*x*y + y^2", 2)));
    CHECK(is_squarefree_bivariate(P("x^2 + x*y + y^2", 2)));
    CHECK_FALSE(is_squarefree_bivariate(P("x^2*y", 2)));
    CHECK_FALSE(is_squarefree_bivariate(P("x*y^3 + y^4", 2)));
    CHECK(is_squarefree_bivariate(P("7", 2)));
}

TEST_CASE("coefficients and pure-power splits") {
    Poly f2 = P("x^2 + x*y + y^2", 2);
    CHECK(coeff_of(f2, Monomial(2, 0)) == Scalar::one(Q));
    CHECK(coeff_of(f2, Monomial(3, 0)).is_zero());
    Poly q2 = P("y", 2) * f2.partial(Y) + Scalar(Q, 3L) * f2;
    CHECK(coeff_of(q2, Monomial(0, 2)) == Scalar(Q, 5L));

    auto [qx, cx] = split_pure_power(f2, Axis::X);
    CHECK(qx == P("x + y", 2));
    CHECK(cx == Scalar::one(Q));
    auto [qy, cy] = split_pure_power(P("x^3", 2), Axis::Y);
    CHECK(qy.is_zero());
    CHECK(cy == Scalar::one(Q));
}

TEST_CASE("determinant of columns") {
    PolyColumn e{P("x"), P("y"), P("z")};
    PolyColumn a{P("1"), P("0"), P("0")}, b{P("0"), P("1"), P("0")};
    CHECK(det3(a, b, e) == P("z"));
    CHECK(det3(e, a, b) == P("z"));
    CHECK(det3(a, a, e).is_zero());
}

TEST_CASE("random round trip, ring axioms, Euler, splits") {
    std::mt19937_64 rng(11);
    for (FieldTag k : {Q, FieldTag::prime(1009)}) {
        for (int i = 0; i < 1000; ++i) {
            int da = static_cast<int>(rng() % 5), db = static_cast<int>(rng() % 5), dc = static_cast<int>(rng() % 5);
            Poly a = random_form(rng, k, da), b = random_form(rng, k, db), c = random_form(rng, k, dc);
            REQUIRE(Poly::parse(k, a.to_string()) == a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a - a).is_zero());
            if (!a.is_zero() && !b.is_zero()) {
                REQUIRE(*(a * b).degree() == da + db);
                REQUIRE(euler_check(a) == Scalar(k, static_cast<long>(da)));
                auto q = divides(a, a * b);
                REQUIRE(q.has_value());
                REQUIRE(*q == b);
            }
            Poly s = random_form(rng, k, da + 1, 2);
            int m = da + 1;
            auto [qx, cx] = split_pure_power(s, Axis::X);
            REQUIRE(Poly::variable(k, X, 2) * qx + Poly::term(cx, Monomial(0, m), 2) == s);
            auto [qy, cy] = split_pure_power(s, Axis::Y);
            REQUIRE(Poly::variable(k, Y, 2) * qy + Poly::term(cy, Monomial(m, 0), 2) == s);
        }
    }
}

TEST_CASE("mixed partials commute") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_form(rng, Q, static_cast<int>(rng() % 7) + 1);
        REQUIRE(p.partial(X).partial(Y) == p.partial(Y).partial(X));
        REQUIRE(p.partial(X).partial(Z) == p.partial(Z).partial(X));
    }
}
