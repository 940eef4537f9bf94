#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace sforge {

/// Base for every error the core raises. The C API maps subclasses to status codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

class InvalidField : public Error {
public:
    using Error::Error;
};

/// Which field a run works over: the rationals, or F_p for a prime p.
class FieldTag {
public:
    enum class Kind { Rationals, Prime };

    static FieldTag rationals() { return FieldTag(Kind::Rationals, 0); }
    /// Throws InvalidField unless p is prime and fits in 32 bits.
    static FieldTag prime(std::uint64_t p);
    /// Accepts "q" or "fp:P".
    static FieldTag parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rationals; }
    std::uint64_t modulus() const { return p_; }
    std::string to_string() const;

    /// char 0, or p > 3d.
    bool admits_degree(int d) const;

    friend bool operator==(const FieldTag&, const FieldTag&) = default;

private:
    FieldTag(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);
/// Inverse of a modulo p via the extended Euclidean algorithm. a must be nonzero mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Exact element of a FieldTag's field. Rationals are kept in lowest terms with
/// positive denominator; residues are kept in [0, p).
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() : tag_(FieldTag::rationals()), value_(mpq_class(0)) {}
    Scalar(FieldTag tag, long n);
    Scalar(FieldTag tag, const mpz_class& n);
    /// num/den mapped into the field; throws DivisionByZero if den maps to 0.
    Scalar(FieldTag tag, const mpz_class& num, const mpz_class& den);

    static Scalar zero(FieldTag tag) { return Scalar(tag, 0L); }
    static Scalar one(FieldTag tag) { return Scalar(tag, 1L); }
    /// "-3/7", "12"; over F_p any integer or fraction is reduced.
    static Scalar parse(FieldTag tag, std::string_view text);

    const FieldTag& field() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;
    /// Sign for rationals; residues report 0 or 1.
    int sign() const;

    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    FieldTag tag_;
    std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace sforge
