#include <doctest.h>

#include "field.hpp"
#include "support.hpp"

using namespace sforge;
using sforge::testing::random_nonzero;
using sforge::testing::random_scalar;

namespace {

const FieldTag Q = FieldTag::rationals();
const FieldTag F101 = FieldTag::prime(101);

Scalar q(long n, long d = 1) { return Scalar(Q, mpz_class(n), mpz_class(d)); }
Scalar fp(long n) { return Scalar(F101, n); }

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(2, -4) == q(-1, 2));
    CHECK(q(-3, 7).to_string() == "-3/7");
    CHECK(q(12).to_string() == "12");
    CHECK(q(6, 3).to_string() == "2");
    CHECK((q(5, 3) / q(10, 9)).to_string() == "3/2");
}

TEST_CASE("prime field arithmetic") {
    CHECK((fp(5) * fp(0)).is_zero());
    CHECK(fp(7) / fp(3) == fp(36));
    CHECK(fp(-1).to_string() == "100");
    CHECK(Scalar(F101, mpz_class(1), mpz_class(2)) == fp(51));
    CHECK(inverse_mod(3, 101) == 34);
}

TEST_CASE("inverse agrees with exhaustive search") {
    for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 1009ULL}) {
        for (std::uint64_t a = 1; a < p; ++a) {
            std::uint64_t brute = 0;
            for (std::uint64_t b = 1; b < p; ++b)
                if (a * b % p == 1) brute = b;
            REQUIRE(inverse_mod(a, p) == brute);
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(q(1) / q(0), DivisionByZero);
    CHECK_THROWS_AS(fp(1) / fp(0), DivisionByZero);
    CHECK_THROWS_AS(fp(1) + q(1), FieldMismatch);
    CHECK_THROWS_AS(FieldTag::prime(100), InvalidField);
    CHECK_THROWS_AS(FieldTag::parse("fp:x"), InvalidField);
    CHECK_THROWS_AS(FieldTag::parse("r"), InvalidField);
    CHECK_THROWS_AS(Scalar(F101, mpz_class(1), mpz_class(101)), DivisionByZero);
}

TEST_CASE("field tags") {
    CHECK(FieldTag::parse("q") == Q);
    CHECK(FieldTag::parse("fp:1009") == FieldTag::prime(1009));
    CHECK(FieldTag::prime(1009).to_string() == "fp:1009");
    CHECK(FieldTag::prime(29).admits_degree(10) == false);
    CHECK(FieldTag::prime(37).admits_degree(11) == true);
    CHECK(Q.admits_degree(1000));
    CHECK(is_prime(1009));
    CHECK_FALSE(is_prime(1011));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(2024);
    for (FieldTag k : {Q, FieldTag::prime(1009), F101}) {
        for (int i = 0; i < 1000; ++i) {
            Scalar a = random_scalar(rng, k), b = random_scalar(rng, k), c = random_scalar(rng, k);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + Scalar::zero(k) == a);
            REQUIRE(a * Scalar::one(k) == a);
            REQUIRE((a + (-a)).is_zero());
            Scalar n = random_nonzero(rng, k);
            REQUIRE(n * n.inverse() == Scalar::one(k));
            REQUIRE((a / n) * n == a);
        }
    }
}

TEST_CASE("scalar text round trip") {
    std::mt19937_64 rng(7);
    for (FieldTag k : {Q, FieldTag::prime(1009)}) {
        for (int i = 0; i < 1000; ++i) {
            Scalar a = random_scalar(rng, k);
            REQUIRE(Scalar::parse(k, a.to_string()) == a);
        }
    }
}
