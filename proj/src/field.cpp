#include "field.hpp"

#include <charconv>
#include <limits>

namespace sforge {

namespace {

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

bool parse_integer(std::string_view s, mpz_class& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    std::string digits(s.substr(i));
    out = mpz_class(digits, 10);
    if (s[0] == '-') out = -out;
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u}) {
        if (n % q == 0) return n == q;
    }
    for (std::uint64_t q = 11; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    std::int64_t s0 = 0, s1 = 1;
    if (r1 == 0) throw DivisionByZero();
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    std::int64_t pi = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((s0 % pi) + pi) % pi);
}

FieldTag FieldTag::prime(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw InvalidField("prime modulus must fit in 32 bits: " + std::to_string(p));
    if (!is_prime(p)) throw InvalidField("modulus is not prime: " + std::to_string(p));
    return FieldTag(Kind::Prime, p);
}

FieldTag FieldTag::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw InvalidField("bad field spec: " + std::string(text));
        return prime(p);
    }
    throw InvalidField("bad field spec (expected q or fp:P): " + std::string(text));
}

std::string FieldTag::to_string() const {
    return is_rational() ? std::string("q") : "fp:" + std::to_string(p_);
}

bool FieldTag::admits_degree(int d) const {
    return is_rational() || p_ > static_cast<std::uint64_t>(3 * d);
}

Scalar::Scalar(FieldTag tag, long n) : tag_(tag) {
    if (tag.is_rational())
        value_ = mpq_class(n);
    else
        value_ = reduce(mpz_class(n), tag.modulus());
}

Scalar::Scalar(FieldTag tag, const mpz_class& n) : tag_(tag) {
    if (tag.is_rational())
        value_ = mpq_class(n);
    else
        value_ = reduce(n, tag.modulus());
}

Scalar::Scalar(FieldTag tag, const mpz_class& num, const mpz_class& den) : tag_(tag) {
    if (tag.is_rational()) {
        if (den == 0) throw DivisionByZero();
        mpq_class q(num, den);
        q.canonicalize();
        value_ = q;
    } else {
        std::uint64_t p = tag.modulus();
        std::uint64_t dn = reduce(den, p);
        if (dn == 0) throw DivisionByZero();
        value_ = mulmod(reduce(num, p), inverse_mod(dn, p), p);
    }
}

Scalar Scalar::parse(FieldTag tag, std::string_view text) {
    auto slash = text.find('/');
    mpz_class num, den(1);
    bool ok = slash == std::string_view::npos
                  ? parse_integer(text, num)
                  : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den) &&
                        text[slash + 1] != '-' && text[slash + 1] != '+';
    if (!ok) throw Error("malformed scalar: " + std::string(text));
    return Scalar(tag, num, den);
}

bool Scalar::is_zero() const {
    if (tag_.is_rational()) return rational() == 0;
    return residue() == 0;
}

bool Scalar::is_one() const {
    if (tag_.is_rational()) return rational() == 1;
    return residue() == 1;
}

int Scalar::sign() const {
    if (tag_.is_rational()) return sgn(rational());
    return residue() == 0 ? 0 : 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(tag_ == o.tag_)) throw FieldMismatch();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (tag_.is_rational())
        r.value_ = mpq_class(-rational());
    else if (residue() != 0)
        r.value_ = tag_.modulus() - residue();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r = *this;
    if (tag_.is_rational())
        r.value_ = mpq_class(1 / rational());
    else
        r.value_ = inverse_mod(residue(), tag_.modulus());
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (tag_.is_rational()) {
        std::get<mpq_class>(value_) += o.rational();
    } else {
        std::uint64_t s = residue() + o.residue();
        if (s >= tag_.modulus()) s -= tag_.modulus();
        value_ = s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (tag_.is_rational()) {
        std::get<mpq_class>(value_) -= o.rational();
    } else {
        std::uint64_t a = residue(), b = o.residue();
        value_ = a >= b ? a - b : a + tag_.modulus() - b;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (tag_.is_rational())
        std::get<mpq_class>(value_) *= o.rational();
    else
        value_ = mulmod(residue(), o.residue(), tag_.modulus());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    if (o.is_zero()) throw DivisionByZero();
    if (tag_.is_rational())
        std::get<mpq_class>(value_) /= o.rational();
    else
        value_ = mulmod(residue(), inverse_mod(o.residue(), tag_.modulus()), tag_.modulus());
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.tag_ == b.tag_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (tag_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

}  // namespace sforge
