#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "field.hpp"

namespace sforge {

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class EulerViolation : public Error {
public:
    using Error::Error;
};

enum Var : int { X = 0, Y = 1, Z = 2 };

/// Exponent vector (e_x, e_y, e_z).
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    Monomial() = default;
    Monomial(int ex, int ey, int ez = 0) : e{ex, ey, ez} {}

    int degree() const { return e[0] + e[1] + e[2]; }
    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }
    Monomial operator*(const Monomial& o) const {
        return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]};
    }
    /// Requires divides(o).
    Monomial quotient_of(const Monomial& o) const {
        return {o.e[0] - e[0], o.e[1] - e[1], o.e[2] - e[2]};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lex, x > y > z.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Monomials of total degree t in nvars variables, in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(int t, int nvars);
/// Position of m within monomials_of_degree(m.degree(), 3).
std::size_t monomial_index3(const Monomial& m);
/// Position of m (e_z == 0) within monomials_of_degree(m.degree(), 2).
inline std::size_t monomial_index2(const Monomial& m) { return static_cast<std::size_t>(m.e[1]); }

/// Sparse polynomial over a FieldTag in x, y (nvars = 2) or x, y, z (nvars = 3).
/// No stored coefficient is zero; terms iterate in descending graded-lex order.
class Poly {
public:
    using Terms = std::map<Monomial, Scalar, GrlexDescending>;

    explicit Poly(FieldTag tag = FieldTag::rationals(), int nvars = 3) : tag_(tag), nvars_(nvars) {}

    static Poly constant(const Scalar& c, int nvars = 3);
    static Poly constant(FieldTag tag, long c, int nvars = 3) { return constant(Scalar(tag, c), nvars); }
    static Poly term(const Scalar& c, const Monomial& m, int nvars = 3);
    static Poly monomial(FieldTag tag, const Monomial& m, int nvars = 3) {
        return term(Scalar::one(tag), m, nvars);
    }
    static Poly variable(FieldTag tag, Var v, int nvars = 3);
    /// Parses the textual grammar; z is rejected when nvars == 2.
    static Poly parse(FieldTag tag, std::string_view text, int nvars = 3);

    const FieldTag& field() const { return tag_; }
    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Highest total degree; nullopt for zero.
    std::optional<int> degree() const;
    /// Zero is homogeneous of every degree.
    bool is_homogeneous() const;
    bool is_homogeneous_of(int m) const;
    /// Largest exponent of the variable appearing in any term.
    int degree_in(Var v) const;

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);
    const std::pair<const Monomial, Scalar>& leading() const { return *terms_.begin(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);
    friend Poly operator*(const Poly& p, const Scalar& c) { return c * p; }
    Poly times_monomial(const Monomial& m) const;
    Poly pow(unsigned k) const;

    /// Formal partial derivative.
    Poly partial(Var v) const;
    /// Coefficient of z^k as a polynomial in x, y (nvars = 2).
    Poly z_coefficient(int k) const;
    /// Degree-t homogeneous part.
    Poly homogeneous_part(int t) const;
    /// Same terms, declared in the given number of variables.
    Poly with_nvars(int nvars) const;

    /// Canonical form: graded-lex descending, explicit '*', no '^1'.
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }

private:
    FieldTag tag_;
    int nvars_;
    Terms terms_;
};

/// Checks x P_x + y P_y + z P_z = m P for homogeneous P of degree m; returns m.
Scalar euler_check(const Poly& p);

/// Exact quotient Q with P = D Q, or nullopt. D must be nonzero.
std::optional<Poly> divides(const Poly& d, const Poly& p);

/// Square-freeness of a homogeneous form in x, y: x and y may each divide at most once,
/// and the dehomogenisation at y = 1 of the remaining factor has gcd(p, p') constant.
bool is_squarefree_bivariate(const Poly& p);

inline Scalar coeff_of(const Poly& p, const Monomial& m) { return p.coeff(m); }

enum class Axis { X, Y };

/// Axis::X: P = x Q + c y^m. Axis::Y: P = y Q + c x^m. P homogeneous of degree m in x, y.
std::pair<Poly, Scalar> split_pure_power(const Poly& p, Axis axis);

/// 3-vector of polynomials, e.g. one column of a Saito matrix.
using PolyColumn = std::array<Poly, 3>;

/// (F_x, F_y, F_z).
PolyColumn gradient(const Poly& f);
/// grad . col
Poly dot(const PolyColumn& grad, const PolyColumn& col);
/// Determinant of the 3x3 matrix with the given columns.
Poly det3(const PolyColumn& c0, const PolyColumn& c1, const PolyColumn& c2);

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
using UniPoly = std::vector<Scalar>;
UniPoly uni_gcd(UniPoly a, UniPoly b);
UniPoly uni_derivative(const UniPoly& a);

}  // namespace sforge
