#include "poly.hpp"

#include <cctype>

namespace sforge {

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

std::vector<Monomial> monomials_of_degree(int t, int nvars) {
    std::vector<Monomial> out;
    if (t < 0) return out;
    if (nvars == 2) {
        for (int ey = 0; ey <= t; ++ey) out.emplace_back(t - ey, ey, 0);
        return out;
    }
    for (int ex = t; ex >= 0; --ex)
        for (int ey = t - ex; ey >= 0; --ey) out.emplace_back(ex, ey, t - ex - ey);
    return out;
}

std::size_t monomial_index3(const Monomial& m) {
    std::size_t k = static_cast<std::size_t>(m.degree() - m.e[0]);
    return k * (k + 1) / 2 + (k - static_cast<std::size_t>(m.e[1]));
}

Poly Poly::constant(const Scalar& c, int nvars) {
    return term(c, Monomial{}, nvars);
}

Poly Poly::term(const Scalar& c, const Monomial& m, int nvars) {
    Poly p(c.field(), nvars);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Poly Poly::variable(FieldTag tag, Var v, int nvars) {
    Monomial m;
    m.e[v] = 1;
    return monomial(tag, m, nvars);
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return is_homogeneous_of(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous_of(int m) const {
    for (const auto& [mono, c] : terms_)
        if (mono.degree() != m) return false;
    return true;
}

int Poly::degree_in(Var v) const {
    int best = 0;
    for (const auto& [mono, c] : terms_) best = std::max(best, mono.e[v]);
    return best;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(tag_) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(tag_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!(tag_ == o.tag_)) throw FieldMismatch();
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!(tag_ == o.tag_)) throw FieldMismatch();
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!(a.tag_ == b.tag_)) throw FieldMismatch();
    Poly r(a.tag_, std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
    Poly r(p.tag_, p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * v);
    return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
    Poly r(tag_, nvars_);
    if (m.e[2] > 0) r.nvars_ = 3;
    for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono * m, c);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(Scalar::one(tag_), nvars_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::partial(Var v) const {
    Poly r(tag_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[v] == 0) continue;
        Monomial d = m;
        d.e[v] -= 1;
        r.add_term(d, c * Scalar(tag_, static_cast<long>(m.e[v])));
    }
    return r;
}

Poly Poly::z_coefficient(int k) const {
    Poly r(tag_, 2);
    for (const auto& [m, c] : terms_)
        if (m.e[2] == k) r.terms_.emplace(Monomial(m.e[0], m.e[1], 0), c);
    return r;
}

Poly Poly::homogeneous_part(int t) const {
    Poly r(tag_, nvars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == t) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::with_nvars(int nvars) const {
    Poly r = *this;
    r.nvars_ = nvars;
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = c.sign() < 0;
        std::string mag = negative ? (-c).to_string() : c.to_string();
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono;
        static constexpr char names[3] = {'x', 'y', 'z'};
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[i];
            if (m.e[i] > 1) mono += '^' + std::to_string(m.e[i]);
        }
        bool unit = (mag == "1");
        if (mono.empty())
            out += mag;
        else if (unit)
            out += mono;
        else
            out += mag + '*' + mono;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(FieldTag tag, std::string_view text, int nvars) : tag_(tag), s_(text), nvars_(nvars) {}

    Poly parse() {
        Poly result(tag_, nvars_);
        auto add = [&](const std::pair<Monomial, Scalar>& t, bool negate) {
            result.add_term(t.first, negate ? -t.second : t.second);
        };
        skip();
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = get() == '-';
        add(term(), negate);
        for (;;) {
            skip();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') throw SyntaxError("expected '+' or '-'", pos_);
            ++pos_;
            add(term(), op == '-');
        }
        return result;
    }

private:
    std::pair<Monomial, Scalar> term() {
        skip();
        Monomial m;
        Scalar c = Scalar::one(tag_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = coefficient();
        } else {
            factor(m);
        }
        for (;;) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            skip();
            factor(m);
        }
        return {m, c};
    }

    Scalar coefficient() {
        mpz_class num = uint_literal();
        mpz_class den(1);
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            std::size_t at = pos_;
            den = uint_literal();
            if (den == 0) throw SyntaxError("zero denominator", at);
        }
        return Scalar(tag_, num, den);
    }

    void factor(Monomial& m) {
        std::size_t at = pos_;
        char c = peek();
        int idx;
        if (c == 'x')
            idx = 0;
        else if (c == 'y')
            idx = 1;
        else if (c == 'z')
            idx = 2;
        else if (std::isalpha(static_cast<unsigned char>(c)))
            throw UnknownVariable(std::string("unknown variable '") + c + "' at position " + std::to_string(at));
        else
            throw SyntaxError("expected variable", at);
        if (idx >= nvars_)
            throw UnknownVariable(std::string("variable '") + c + "' not allowed here at position " +
                                  std::to_string(at));
        ++pos_;
        skip();
        long e = 1;
        if (peek() == '^') {
            ++pos_;
            skip();
            mpz_class v = uint_literal();
            if (!v.fits_sint_p() || v > 100000) throw SyntaxError("exponent too large", at);
            e = v.get_si();
        }
        m.e[idx] += static_cast<int>(e);
    }

    mpz_class uint_literal() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected unsigned integer", start);
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }

    FieldTag tag_;
    std::string_view s_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(FieldTag tag, std::string_view text, int nvars) {
    Parser p(tag, text, nvars);
    return p.parse();
}

Scalar euler_check(const Poly& p) {
    int m = p.is_zero() ? 0 : *p.degree();
    if (!p.is_homogeneous()) throw EulerViolation("polynomial is not homogeneous");
    FieldTag tag = p.field();
    Poly lhs(tag, p.nvars());
    for (int v = 0; v < 3; ++v) {
        Monomial mv;
        mv.e[v] = 1;
        lhs += p.partial(static_cast<Var>(v)).times_monomial(mv);
    }
    Scalar ms(tag, static_cast<long>(m));
    if (!(lhs == ms * p)) throw EulerViolation("Euler identity fails for degree " + std::to_string(m));
    return ms;
}

std::optional<Poly> divides(const Poly& d, const Poly& p) {
    if (d.is_zero()) throw DivisionByZero();
    Poly rem = p;
    Poly quot(p.field(), std::max(p.nvars(), d.nvars()));
    const auto& [ld, cd] = d.leading();
    Scalar inv = cd.inverse();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.leading();
        if (!ld.divides(lr)) return std::nullopt;
        Monomial q = ld.quotient_of(lr);
        Scalar c = cr * inv;
        quot.add_term(q, c);
        rem -= c * d.times_monomial(q);
    }
    return quot;
}

UniPoly uni_derivative(const UniPoly& a) {
    UniPoly r;
    if (a.size() <= 1) return r;
    FieldTag tag = a[0].field();
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Scalar(tag, static_cast<long>(i)));
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

namespace {

void trim(UniPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    trim(a);
    Scalar inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Scalar c = a.back() * inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_squarefree_bivariate(const Poly& p) {
    if (p.is_zero()) throw Error("is_squarefree_bivariate: zero polynomial");
    if (!p.is_homogeneous() || p.degree_in(Z) > 0)
        throw Error("is_squarefree_bivariate: expected a homogeneous form in x, y");
    // Strip powers of x and y; each may appear at most once.
    int min_x = p.degree_in(X), min_y = p.degree_in(Y);
    for (const auto& [m, c] : p.terms()) {
        min_x = std::min(min_x, m.e[0]);
        min_y = std::min(min_y, m.e[1]);
    }
    if (min_x > 1 || min_y > 1) return false;
    int m = *p.degree() - min_x - min_y;
    UniPoly u(static_cast<std::size_t>(m + 1), Scalar::zero(p.field()));
    // P(t, 1) with the stripped factor removed: coefficient of t^k is [x^{k+min_x} y^{...}].
    for (const auto& [mono, c] : p.terms()) u[static_cast<std::size_t>(mono.e[0] - min_x)] += c;
    trim(u);
    UniPoly g = uni_gcd(u, uni_derivative(u));
    if (g.size() > 1) return false;
    // A vanishing leading coefficient of p(t,1) hides a factor y; min_y already covers it.
    return true;
}

std::pair<Poly, Scalar> split_pure_power(const Poly& p, Axis axis) {
    FieldTag tag = p.field();
    if (p.is_zero()) return {Poly(tag, 2), Scalar::zero(tag)};
    if (!p.is_homogeneous()) throw Error("split_pure_power: polynomial is not homogeneous");
    int m = *p.degree();
    int a = axis == Axis::X ? 0 : 1;
    Monomial pure = axis == Axis::X ? Monomial(0, m, 0) : Monomial(m, 0, 0);
    Poly q(tag, 2);
    Scalar c = Scalar::zero(tag);
    for (const auto& [mono, v] : p.terms()) {
        if (mono == pure) {
            c = v;
            continue;
        }
        Monomial red = mono;
        red.e[a] -= 1;
        q.add_term(red, v);
    }
    return {q, c};
}

PolyColumn gradient(const Poly& f) {
    return {f.partial(X), f.partial(Y), f.partial(Z)};
}

Poly dot(const PolyColumn& grad, const PolyColumn& col) {
    return grad[0] * col[0] + grad[1] * col[1] + grad[2] * col[2];
}

Poly det3(const PolyColumn& a, const PolyColumn& b, const PolyColumn& c) {
    // Expansion along the first column.
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace sforge
