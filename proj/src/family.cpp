#include "family.hpp"

#include <random>

namespace sforge {

namespace {

bool bivariate_form(const Poly& p, int degree) {
    return !p.is_zero() && p.degree_in(Z) == 0 && p.is_homogeneous_of(degree);
}

bool var_divides(const Poly& p, Var v) {
    Monomial m;
    m.e[v] = 1;
    return divides(Poly::monomial(p.field(), m, 2), p).has_value();
}

// Draw in [0, bound) without relying on the implementation-defined distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

Scalar random_coefficient(std::mt19937_64& rng, FieldTag field, bool nonzero) {
    for (;;) {
        Scalar c = field.is_rational()
                       ? Scalar(field, static_cast<long>(draw(rng, 21)) - 10)
                       : Scalar(field, mpz_class(static_cast<unsigned long>(draw(rng, field.modulus()))));
        if (!nonzero || !c.is_zero()) return c;
    }
}

// Dense random form of the given degree in x, y with nonzero x^deg and y^deg coefficients.
Poly random_form(std::mt19937_64& rng, FieldTag field, int degree) {
    Poly p(field, 2);
    for (int ey = 0; ey <= degree; ++ey) {
        bool edge = ey == 0 || ey == degree;
        p.add_term(Monomial(degree - ey, ey, 0), random_coefficient(rng, field, edge));
    }
    return p;
}

Poly dehomogenised_to_form(const UniPoly& g, FieldTag field) {
    int k = static_cast<int>(g.size()) - 1;
    Poly out(field, 2);
    for (int i = 0; i <= k; ++i) out.add_term(Monomial(i, k - i, 0), g[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

bool ValidationReport::ok() const {
    for (const auto& c : conditions)
        if (c.required && !c.pass) return false;
    return true;
}

std::string ValidationReport::failures() const {
    std::string out;
    for (const auto& c : conditions) {
        if (!c.required || c.pass) continue;
        if (!out.empty()) out += ", ";
        out += c.name;
    }
    return out;
}

ValidationReport validate(const FamilyParams& p, bool require_squarefree) {
    ValidationReport r;
    auto add = [&](std::string name, bool pass, std::string detail, bool required = true) {
        r.conditions.push_back({std::move(name), pass, required, std::move(detail)});
    };
    add("degree_at_least_5", p.d >= 5, "d = " + std::to_string(p.d));
    add("alpha_beta_nonnegative", p.alpha >= 0 && p.beta >= 0,
        "alpha = " + std::to_string(p.alpha) + ", beta = " + std::to_string(p.beta));
    add("alpha_plus_beta_bound", p.alpha + p.beta <= p.max_alpha_beta() && p.alpha + p.beta >= 0,
        "alpha + beta = " + std::to_string(p.alpha + p.beta) + ", bound floor((d+1)/2) - 3 = " +
            std::to_string(p.max_alpha_beta()));
    add("field_characteristic", p.field.admits_degree(p.d),
        p.field.is_rational() ? "characteristic 0" : "p = " + std::to_string(p.field.modulus()) + ", need p > 3d");

    bool f1_ok = p.alpha >= 0 && bivariate_form(p.f1, p.alpha);
    add("f1_degree", f1_ok, "F1 must be a nonzero form in x, y of degree alpha");
    if (f1_ok) {
        add("x_not_divides_f1", !var_divides(p.f1, X), "");
        add("y_not_divides_f1", !var_divides(p.f1, Y), "");
        add("f1_squarefree", is_squarefree_bivariate(p.f1), "", require_squarefree);
    }
    int deg2 = p.f2_degree();
    bool f2_ok = deg2 >= 0 && bivariate_form(p.f2, deg2);
    add("f2_degree", f2_ok, "F2 must be a nonzero form in x, y of degree d - v - alpha - 1 = " + std::to_string(deg2));
    if (f2_ok) {
        add("x_not_divides_f2", !var_divides(p.f2, X), "");
        add("y_not_divides_f2", !var_divides(p.f2, Y), "");
    }
    return r;
}

Poly assemble_divisor(const FamilyParams& p) {
    FieldTag k = p.field;
    int v = p.v();
    Poly f = p.f1.times_monomial(Monomial(p.d - p.alpha, 0, 0)).with_nvars(3);
    f += p.f2.times_monomial(Monomial(0, v + p.alpha + 1, 0));
    f += Poly::monomial(k, Monomial(p.beta, p.d - p.beta - 1, 1));
    return f;
}

DivisorInstance instance_with_polynomial(const FamilyParams& params, const Poly& f) {
    DivisorInstance inst{params, f.with_nvars(3), {f.partial(X), f.partial(Y), f.partial(Z)}};
    return inst;
}

DivisorInstance build_divisor(const FamilyParams& params, bool require_squarefree) {
    ValidationReport rep = validate(params, require_squarefree);
    if (!rep.ok()) throw InvalidParams("invalid family parameters: " + rep.failures());
    DivisorInstance inst = instance_with_polynomial(params, assemble_divisor(params));
    Scalar m = euler_check(inst.f);
    if (!(m == Scalar(params.field, static_cast<long>(params.d))))
        throw EulerViolation("Euler check returned the wrong degree");
    return inst;
}

FamilyParams random_instance(int d, int alpha, int beta, std::uint64_t seed, FieldTag field, SquarefreeMode mode) {
    FamilyParams p;
    p.d = d;
    p.alpha = alpha;
    p.beta = beta;
    p.field = field;
    p.seed = seed;
    if (d < 5 || alpha < 0 || beta < 0 || alpha + beta > p.max_alpha_beta())
        throw InvalidParams("(d, alpha, beta) = (" + std::to_string(d) + ", " + std::to_string(alpha) + ", " +
                            std::to_string(beta) + ") violates the degree bound");
    if (!field.admits_degree(d)) throw InvalidParams("field characteristic must exceed 3d");

    std::mt19937_64 rng(seed);
    bool drop = mode == SquarefreeMode::Drop;
    for (int attempt = 0; attempt < 100; ++attempt) {
        if (alpha == 0) {
            p.f1 = Poly::constant(Scalar::one(field), 2);
        } else if (drop && alpha >= 2) {
            Poly l = random_form(rng, field, 1);
            p.f1 = l * l * random_form(rng, field, alpha - 2);
        } else {
            p.f1 = random_form(rng, field, alpha);
        }
        p.f2 = random_form(rng, field, p.f2_degree());
        if (validate(p, !drop).ok()) return p;
    }
    throw ExhaustedRetries("no valid instance after 100 attempts");
}

std::vector<std::pair<int, int>> legal_pairs(int d) {
    std::vector<std::pair<int, int>> out;
    int bound = (d + 1) / 2 - 3;
    if (d < 5) return out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b) out.emplace_back(a, b);
    return out;
}

Poly gcd_bivariate(const Poly& a, const Poly& b) {
    FieldTag k = a.field();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto strip = [](const Poly& p, int& mx, int& my) {
        mx = p.degree_in(X);
        my = p.degree_in(Y);
        for (const auto& [m, c] : p.terms()) {
            mx = std::min(mx, m.e[0]);
            my = std::min(my, m.e[1]);
        }
        // Dehomogenise the cofactor at y = 1, indexed by the remaining x exponent.
        UniPoly u(static_cast<std::size_t>(*p.degree() - mx - my + 1), Scalar::zero(p.field()));
        for (const auto& [m, c] : p.terms()) u[static_cast<std::size_t>(m.e[0] - mx)] += c;
        return u;
    };
    int ax, ay, bx, by;
    UniPoly ua = strip(a, ax, ay), ub = strip(b, bx, by);
    UniPoly g = uni_gcd(ua, ub);
    Scalar inv = g.back().inverse();
    for (auto& c : g) c *= inv;
    return dehomogenised_to_form(g, k).times_monomial(Monomial(std::min(ax, bx), std::min(ay, by), 0));
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || !f.is_homogeneous()) return false;
    if (f.degree_in(Z) != 1) throw Error("is_irreducible: expected a form linear in z");
    Poly a = f.z_coefficient(0);
    Poly b = f.z_coefficient(1);
    if (a.is_zero()) return *f.degree() == 1;
    Poly g = gcd_bivariate(a, b);
    return *g.degree() == 0;
}

SupportInfo support_info(const DivisorInstance& inst) {
    SupportInfo s;
    const FamilyParams& p = inst.params;
    for (const auto& [m, c] : inst.f.terms()) s.monomials.push_back(m);
    int v = p.v();
    // Block one has y-exponents in [0, alpha], block two in [v + alpha + 1, d].
    s.intervals_disjoint = p.alpha < v + p.alpha + 1;
    s.contained_in_family_support = true;
    for (const auto& m : s.monomials) {
        bool z_term = m == Monomial(p.beta, p.d - p.beta - 1, 1);
        bool block1 = m.e[2] == 0 && m.e[1] <= p.alpha;
        bool block2 = m.e[2] == 0 && m.e[1] >= v + p.alpha + 1;
        if (!(z_term || block1 || block2)) s.contained_in_family_support = false;
    }
    return s;
}

}  // namespace sforge
