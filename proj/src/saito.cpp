#include "saito.hpp"

#include "oracle.hpp"

namespace sforge {

namespace {

Poly mono(FieldTag k, int ex, int ey, int ez = 0) { return Poly::monomial(k, Monomial(ex, ey, ez)); }

Scalar sc(FieldTag k, long n) { return Scalar(k, n); }

Poly div_x(const Poly& p, const char* what) {
    if (p.is_zero()) return p;
    auto q = divides(Poly::variable(p.field(), X), p);
    if (!q) throw SaitoConstructionFailed(what, "not divisible by x");
    return *q;
}

struct Pieces {
    Poly f1x, f1y, p, f2x, f2y, q2;
};

Pieces pieces(const FamilyParams& pr) {
    FieldTag k = pr.field;
    Pieces s;
    Poly f1 = pr.f1.with_nvars(3), f2 = pr.f2.with_nvars(3);
    s.f1x = f1.partial(X);
    s.f1y = f1.partial(Y);
    s.p = Poly::variable(k, X) * s.f1x + sc(k, pr.d - pr.alpha) * f1;
    s.f2x = f2.partial(X);
    s.f2y = f2.partial(Y);
    s.q2 = Poly::variable(k, Y) * s.f2y + sc(k, pr.d - pr.v() + pr.alpha) * f2;
    return s;
}

Poly g3_of(const FamilyParams& pr, const Pieces& s, const Poly& g1, const Poly& g2) {
    FieldTag k = pr.field;
    Poly f2 = pr.f2.with_nvars(3);
    Poly y = Poly::variable(k, Y);
    return -(mono(k, 1, 1) * s.f2x * g1 + (y * s.f2y + sc(k, pr.v() + pr.alpha + 1) * f2) * g2);
}

// Third column from H1..H6 with M = x^{beta-1} y^gamma; the division by x is exact when
// beta >= 1 or x | E.
PolyColumn third_column(const FamilyParams& pr, const Poly& h1, const Poly& h2, const Poly& h3, const Poly& h4,
                        const Poly& h5, const Poly& h6) {
    FieldTag k = pr.field;
    int b = pr.beta, g = pr.gamma(), d = pr.d;
    Poly z = Poly::variable(k, Z);
    Poly c0 = h1 + h2.times_monomial(Monomial(b, g + 1, 1));
    Poly c1 = h3 + div_x(h4.times_monomial(Monomial(b, g + 1, 1)), "third_column");
    Poly inner = (sc(k, b) * Poly::variable(k, Y) * h2 + sc(k, d - b - 1) * h4).times_monomial(Monomial(b, g, 2));
    Poly c2 = h5 + h6 * z - div_x(inner, "third_column");
    return {c0, c1, c2};
}

PolyColumn euler_column(FieldTag k) {
    return {Poly::variable(k, X), Poly::variable(k, Y), Poly::variable(k, Z)};
}

PolyColumn second_column(const FamilyParams& pr, const Ingredients& ing) {
    int b = pr.beta, g = pr.gamma();
    return {ing.g1.times_monomial(Monomial(b + 1, g + 2, 0)), ing.g2.times_monomial(Monomial(b, g + 2, 0)),
            ing.g3 - ing.w.times_monomial(Monomial(b, g + 1, 1))};
}

std::optional<Scalar> constant_quotient(const Poly& f, const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    auto q = divides(f, p);
    if (!q || q->is_zero() || *q->degree() != 0) return std::nullopt;
    return q->leading().second;
}

}  // namespace

std::string route_name(Route r) {
    switch (r) {
        case Route::ExplicitOdd: return "explicit_odd";
        case Route::ExplicitBetaZero: return "explicit_beta_zero";
        case Route::ExplicitEvenProbe: return "explicit_even_probe";
        case Route::Oracle: return "oracle";
    }
    return "unknown";
}

GradedSystem build_graded_system(const FamilyParams& pr, const Scalar& mu) {
    if (pr.d % 2 == 0) throw Error("the graded system is defined for odd d only");
    FieldTag k = pr.field;
    int v = pr.v(), a = pr.alpha, b = pr.beta;
    Pieces s = pieces(pr);
    Poly g1 = s.f1y, g2 = -s.p;
    GradedSystem sys;
    sys.rows[0] = {-g2, Poly::variable(k, X) * g1, Poly(k, 3)};
    sys.rows[1] = {Poly::variable(k, Y) * s.f2x, s.q2, mono(k, b, v - a - b)};
    sys.rhs = {Poly::term(mu, Monomial(0, v + a, 0)), Poly::term(-mu, Monomial(2 * v - a, 0, 0))};
    sys.unknown_degree = v;
    sys.mu = mu;
    return sys;
}

std::array<Poly, 2> apply_graded_rows(const GradedSystem& sys, const std::array<Poly, 3>& h) {
    std::array<Poly, 2> out;
    for (std::size_t r = 0; r < 2; ++r) {
        Poly acc(sys.rhs[0].field(), 3);
        for (std::size_t c = 0; c < 3; ++c) acc += sys.rows[r][c] * h[c];
        out[r] = acc;
    }
    return out;
}

GradedSolution solve_graded_system(const GradedSystem& sys) {
    FieldTag k = sys.rhs[0].field();
    int v = sys.unknown_degree;
    int d1 = *sys.rhs[0].degree(), d2 = *sys.rhs[1].degree();
    std::size_t n = static_cast<std::size_t>(v + 1);
    std::size_t r1 = static_cast<std::size_t>(d1 + 1), r2 = static_cast<std::size_t>(d2 + 1);
    Matrix m(k, r1 + r2, 3 * n);
    auto monos = monomials_of_degree(v, 2);
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t col = c * n + i;
            Poly e0 = sys.rows[0][c].times_monomial(monos[i]), e1 = sys.rows[1][c].times_monomial(monos[i]);
            for (const auto& [mo, x] : e0.terms()) m(monomial_index2(mo), col) = x;
            for (const auto& [mo, x] : e1.terms()) m(r1 + monomial_index2(mo), col) = x;
        }
    Vector rhs(r1 + r2, Scalar::zero(k));
    for (const auto& [mo, x] : sys.rhs[0].terms()) rhs[monomial_index2(mo)] = x;
    for (const auto& [mo, x] : sys.rhs[1].terms()) rhs[r1 + monomial_index2(mo)] = x;
    auto sol = solve(m, rhs);
    if (!sol) throw NoSolution("the graded system has no solution");
    auto unpack = [&](const Vector& u) {
        std::array<Poly, 3> h{Poly(k, 3), Poly(k, 3), Poly(k, 3)};
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < n; ++i) h[c].add_term(monos[i], u[c * n + i]);
        return h;
    };
    GradedSolution out;
    auto h = unpack(sol->particular);
    out.h1 = h[0];
    out.h3 = h[1];
    out.h5 = h[2];
    for (const auto& kv : sol->kernel) out.kernel.push_back(unpack(kv));
    return out;
}

std::array<Poly, 3> graded_syzygy_generator(const FamilyParams& pr) {
    FieldTag k = pr.field;
    int v = pr.v(), a = pr.alpha, b = pr.beta;
    Pieces s = pieces(pr);
    Poly g1 = s.f1y, g2 = -s.p;
    return {g1.times_monomial(Monomial(b + 1, v - a - b, 0)), g2.times_monomial(Monomial(b, v - a - b, 0)),
            -(mono(k, 1, 1) * s.f2x * g1) - g2 * s.q2};
}

long graded_module_hilbert(const FamilyParams& pr, int i) {
    FieldTag k = pr.field;
    int v = pr.v(), a = pr.alpha;
    auto sys = build_graded_system(pr, Scalar::one(k));
    int deg1 = i - (v - a), deg2 = i - a, du = i - v;
    long n1 = deg1 < 0 ? 0 : deg1 + 1, n2 = deg2 < 0 ? 0 : deg2 + 1;
    if (du < 0) return n1 + n2;
    auto monos = monomials_of_degree(du, 2);
    Matrix m(k, static_cast<std::size_t>(n1 + n2), 3 * monos.size());
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t j = 0; j < monos.size(); ++j) {
            std::size_t col = c * monos.size() + j;
            Poly e0 = sys.rows[0][c].times_monomial(monos[j]), e1 = sys.rows[1][c].times_monomial(monos[j]);
            for (const auto& [mo, x] : e0.terms()) m(monomial_index2(mo), col) = x;
            for (const auto& [mo, x] : e1.terms()) m(static_cast<std::size_t>(n1) + monomial_index2(mo), col) = x;
        }
    return n1 + n2 - static_cast<long>(rank(m));
}

long graded_module_hilbert_series(const FamilyParams& pr, int i) {
    int v = pr.v(), a = pr.alpha;
    const std::pair<int, long> num[] = {{a, 1}, {v - a, 1}, {v, -3}, {2 * v, 1}};
    long h = 0;
    for (auto [e, c] : num)
        if (i >= e) h += c * (i - e + 1);
    return h;
}

Constants compute_constants(const FamilyParams& pr) {
    FieldTag k = pr.field;
    int d = pr.d, v = pr.v(), a = pr.alpha, b = pr.beta;
    Pieces s = pieces(pr);
    Scalar f = pr.f1.coeff(Monomial(0, a, 0));
    Scalar q = s.q2.coeff(Monomial(0, v - a, 0));
    Scalar g = pr.f2.coeff(Monomial(v - a, 0, 0));
    Scalar p = s.p.coeff(Monomial(a, 0, 0));
    if (f.is_zero() || q.is_zero() || g.is_zero() || p.is_zero())
        throw DegenerateConstant("a pure-power coefficient of F1, F2 vanishes");
    Scalar dma = sc(k, d - a), dva = sc(k, d - v + a);
    Constants c;
    if (b >= 1) {
        c.b = Scalar::one(k);
        c.mu = c.b * dma * dma * f * f * q / sc(k, b);
        c.mu_unsquared = dma * dma * f * q / sc(k, b);
    } else {
        c.b = Scalar::zero(k);
        c.mu = Scalar::one(k);
    }
    if (c.mu.is_zero()) throw DegenerateConstant("mu vanishes");
    c.a = -(c.mu * sc(k, d - b - 1)) / (dva * dva * g * g * p);
    if (b == 0) c.lambda = -c.a;
    return c;
}

namespace {

Ingredients assemble_ingredients(const FamilyParams& pr, const Pieces& s, const Constants& c, const Poly& h1,
                                 const Poly& h3, const Poly& h5) {
    FieldTag k = pr.field;
    int d = pr.d, b = pr.beta, a = pr.alpha, v = pr.v();
    Ingredients ing;
    ing.g1 = s.f1y;
    ing.g2 = -s.p;
    ing.g3 = g3_of(pr, s, ing.g1, ing.g2);
    ing.w = sc(k, b) * Poly::variable(k, Y) * ing.g1 + sc(k, d - b - 1) * ing.g2;
    ing.e = c.a * Poly::variable(k, X) + c.b * Poly::variable(k, Y);
    ing.h1 = h1;
    ing.h3 = h3;
    ing.h5 = h5;
    ing.h2 = ing.g1 * ing.e;
    ing.h4 = ing.g2 * ing.e;

    Poly f1 = pr.f1.with_nvars(3), f2 = pr.f2.with_nvars(3);
    ing.v1 = split_pure_power(h1.with_nvars(2), Axis::X).first.with_nvars(3);
    ing.u1 = split_pure_power(h3.with_nvars(2), Axis::Y).first.with_nvars(3);
    ing.w1 = split_pure_power((c.a * sc(k, d - v + a) * f2 * s.p).with_nvars(2), Axis::Y).first.with_nvars(3);
    ing.w2 = split_pure_power((c.b * sc(k, d - a) * f1 * s.q2).with_nvars(2), Axis::X).first.with_nvars(3);
    ing.h6 = -(sc(k, b) * ing.v1) - sc(k, d - b - 1) * ing.u1 - s.f2x * ing.g1 * ing.e + c.a * s.f2y * s.p +
             c.b * s.f1x * s.q2 + ing.w1 + ing.w2;
    return ing;
}

Poly h6_relation_residual(const FamilyParams& pr, const Pieces& s, const Ingredients& ing) {
    FieldTag k = pr.field;
    Poly x = Poly::variable(k, X), y = Poly::variable(k, Y), xy = mono(k, 1, 1);
    return sc(k, pr.beta) * y * ing.h1 + xy * s.f2x * ing.h2 + sc(k, pr.d - pr.beta - 1) * x * ing.h3 +
           s.q2 * ing.h4 + xy * ing.h6;
}

}  // namespace

std::optional<Scalar> solve_beta_zero_constant(const DivisorInstance& inst, std::string* solution_set) {
    const FamilyParams& pr = inst.params;
    FieldTag k = pr.field;
    Pieces s = pieces(pr);
    auto sol = solve_graded_system(build_graded_system(pr, Scalar::one(k)));
    auto residual = [&](long a) {
        Constants c;
        c.a = sc(k, a);
        c.b = Scalar::zero(k);
        c.mu = Scalar::one(k);
        Ingredients ing = assemble_ingredients(pr, s, c, sol.h1, sol.h3, sol.h5);
        return dot(inst.jacobian, third_column(pr, ing.h1, ing.h2, ing.h3, ing.h4, ing.h5, ing.h6));
    };
    // The residual is affine in a: r(a) = r0 + a * slope.
    Poly r0 = residual(0);
    Poly slope = residual(1) - r0;
    auto set = [&](const char* v) {
        if (solution_set) *solution_set = v;
    };
    if (slope.is_zero()) {
        set(r0.is_zero() ? "line" : "empty");
        return std::nullopt;
    }
    const auto& [lm, lc] = slope.leading();
    Scalar a = -(r0.coeff(lm) / lc);
    if (!(r0 + a * slope).is_zero()) {
        set("empty");
        return std::nullopt;
    }
    set("point");
    return a;
}

Ingredients compute_ingredients(const DivisorInstance& inst, const Constants& c, std::vector<Note>* notes) {
    const FamilyParams& pr = inst.params;
    Pieces s = pieces(pr);
    auto sol = solve_graded_system(build_graded_system(pr, c.mu));
    Ingredients ing = assemble_ingredients(pr, s, c, sol.h1, sol.h3, sol.h5);

    if (notes) {
        notes->push_back({"system_kernel_dimension", std::to_string(sol.kernel.size())});
        notes->push_back({"system_free_parameter", "0"});
        if (!sol.kernel.empty()) {
            // Does the H6 relation still hold one step along the solution line?
            const auto& kv = sol.kernel.front();
            Ingredients moved = assemble_ingredients(pr, s, c, sol.h1 + kv[0], sol.h3 + kv[1], sol.h5 + kv[2]);
            bool here = h6_relation_residual(pr, s, ing).is_zero(), there = h6_relation_residual(pr, s, moved).is_zero();
            notes->push_back({"h6_relation_pins_free_parameter", here && !there ? "true" : "false"});
        }
        if (c.mu_unsquared)
            notes->push_back({"mu_unsquared_form_agrees", c.mu == *c.mu_unsquared ? "true" : "false"});
    }
    return ing;
}

std::array<PolyColumn, 3> assemble_columns(const FamilyParams& pr, const Ingredients& ing) {
    return {euler_column(pr.field), second_column(pr, ing),
            third_column(pr, ing.h1, ing.h2, ing.h3, ing.h4, ing.h5, ing.h6)};
}

Poly check_second_column(const DivisorInstance& inst, const Ingredients& ing) {
    return dot(inst.jacobian, second_column(inst.params, ing));
}

ThirdColumnResidual check_third_column(const DivisorInstance& inst, const Ingredients& ing) {
    const FamilyParams& pr = inst.params;
    ThirdColumnResidual r;
    r.total = dot(inst.jacobian, third_column(pr, ing.h1, ing.h2, ing.h3, ing.h4, ing.h5, ing.h6));
    r.z2 = r.total.z_coefficient(2);
    r.z1 = r.total.z_coefficient(1);
    r.z0 = r.total.z_coefficient(0);
    r.h6_relation = h6_relation_residual(pr, pieces(pr), ing);
    r.g_identity = ing.g1 * ing.h4 - ing.g2 * ing.h2;
    return r;
}

std::array<PolyColumn, 3> SaitoMatrix::normalized() const {
    auto out = columns;
    Scalar inv = unit.inverse();
    for (auto& p : out[2]) p = inv * p;
    return out;
}

SaitoReport verify_saito(const Poly& f, const std::array<PolyColumn, 3>& columns) {
    SaitoReport r;
    auto grad = gradient(f);
    r.det = det3(columns[0], columns[1], columns[2]);
    r.unit = constant_quotient(f, r.det);
    bool all = r.unit.has_value();
    for (std::size_t i = 0; i < 3; ++i) {
        Poly g = dot(grad, columns[i]);
        if (g.is_zero())
            r.quotients[i] = Poly(f.field(), 3);
        else
            r.quotients[i] = divides(f, g);
        all = all && r.quotients[i].has_value();
        int deg = -1;
        for (const auto& p : columns[i])
            if (!p.is_zero()) deg = std::max(deg, *p.degree());
        r.column_degrees.push_back(deg);
    }
    if (r.unit) {
        r.det_residual = r.det - *r.unit * f;
    } else {
        const auto& [lm, lc] = f.leading();
        Scalar c = r.det.coeff(lm) / lc;
        // c = 0 would let det = 0 masquerade as a zero residual.
        if (c.is_zero()) c = Scalar::one(f.field());
        r.det_residual = r.det - c * f;
    }
    r.pass = all;
    return r;
}

SaitoMatrix oracle_saito_matrix(const Poly& f) {
    int d = *f.degree(), v = d / 2;
    std::pair<int, int> degs = d % 2 == 1 ? std::pair{v, v} : std::pair{v - 1, v};
    auto probe = freeness_probe(f, v, degs);
    if (!probe.success)
        throw SaitoConstructionFailed("oracle_probe", "no syzygy pair of degrees (" + std::to_string(degs.first) +
                                                          ", " + std::to_string(degs.second) + ")");
    SaitoMatrix m;
    m.columns = *probe.matrix;
    m.unit = *probe.unit;
    m.route = Route::Oracle;
    return m;
}

EvenProbeReport probe_even_quadratic(const DivisorInstance& inst) {
    const FamilyParams& pr = inst.params;
    FieldTag k = pr.field;
    int d = pr.d, v = pr.v(), b = pr.beta;
    EvenProbeReport rep;
    Pieces s = pieces(pr);
    Ingredients base;
    base.g1 = s.f1y;
    base.g2 = -s.p;
    base.g3 = g3_of(pr, s, base.g1, base.g2);
    base.w = sc(k, b) * Poly::variable(k, Y) * base.g1 + sc(k, d - b - 1) * base.g2;
    PolyColumn c1 = euler_column(k), c2 = second_column(pr, base);

    // One basis column per unknown coefficient: H1, H3, H5 (degree v), H6 (degree v-1), E.
    std::vector<PolyColumn> basis;
    std::vector<Monomial> e_monos;
    Poly zero(k, 3);
    for (int slot = 0; slot < 3; ++slot)
        for (const auto& m : monomials_of_degree(v, 2)) {
            PolyColumn c{zero, zero, zero};
            c[static_cast<std::size_t>(slot)] = Poly::monomial(k, m);
            basis.push_back(c);
        }
    for (const auto& m : monomials_of_degree(v - 1, 2)) basis.push_back({zero, zero, Poly::monomial(k, m * Monomial(0, 0, 1))});
    std::size_t e_start = basis.size();
    for (const auto& m : monomials_of_degree(b == 0 ? 1 : 2, 2)) {
        Monomial em = b == 0 ? m * Monomial(1, 0, 0) : m;
        e_monos.push_back(em);
        Poly e = Poly::monomial(k, em);
        basis.push_back(third_column(pr, zero, base.g1 * e, zero, base.g2 * e, zero, zero));
    }

    int t = v + d - 1;
    std::size_t rows = static_cast<std::size_t>((t + 1) * (t + 2) / 2);
    Matrix m(k, rows, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) m.set_column(j, coefficient_vector(dot(inst.jacobian, basis[j]), t));
    auto kernel = nullspace(m);
    rep.solution_dimension = kernel.size();
    if (kernel.empty()) return rep;

    auto combine = [&](const Vector& u) {
        PolyColumn c{zero, zero, zero};
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!u[j].is_zero())
                for (std::size_t r = 0; r < 3; ++r) c[r] += u[j] * basis[j][r];
        return c;
    };
    std::size_t drows = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    Matrix dm(k, drows, kernel.size());
    std::vector<PolyColumn> kcols;
    for (std::size_t j = 0; j < kernel.size(); ++j) {
        kcols.push_back(combine(kernel[j]));
        dm.set_column(j, coefficient_vector(det3(c1, c2, kcols.back()), d));
    }
    auto sol = solve(dm, coefficient_vector(inst.f, d));
    if (!sol) return rep;
    Vector u(basis.size(), Scalar::zero(k));
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < basis.size(); ++i) u[i] += sol->particular[j] * kernel[j][i];
    Poly e(k, 3);
    for (std::size_t i = 0; i < e_monos.size(); ++i) e.add_term(e_monos[i], u[e_start + i]);
    rep.success = true;
    rep.e = e;
    rep.columns = std::array<PolyColumn, 3>{c1, c2, combine(u)};
    return rep;
}

SaitoMatrix build_saito_matrix(const DivisorInstance& inst, RouteChoice choice, bool strict) {
    const FamilyParams& pr = inst.params;
    bool odd = pr.d % 2 == 1;
    if (choice == RouteChoice::Oracle || (choice == RouteChoice::Auto && !odd)) return oracle_saito_matrix(inst.f);

    SaitoMatrix m;
    if (!odd) {
        auto probe = probe_even_quadratic(inst);
        if (!probe.success) throw SaitoConstructionFailed("even_probe", "no quadratic E");
        m.columns = *probe.columns;
        m.route = Route::ExplicitEvenProbe;
        m.notes.push_back({"even_probe_solution_dimension", std::to_string(probe.solution_dimension)});
        m.notes.push_back({"even_probe_e", probe.e->to_string()});
    } else {
        Constants c = compute_constants(pr);
        if (pr.beta == 0) {
            std::string set;
            auto solved = solve_beta_zero_constant(inst, &set);
            m.notes.push_back({"lambda_solution_set", set});
            if (solved) {
                m.notes.push_back({"lambda_matches_pure_power_elimination", *solved == c.a ? "true" : "false"});
                c.a = *solved;
                c.lambda = -*solved;
            }
        }
        Ingredients ing = compute_ingredients(inst, c, &m.notes);
        m.columns = assemble_columns(pr, ing);
        m.route = pr.beta == 0 ? Route::ExplicitBetaZero : Route::ExplicitOdd;
        m.constants = c;
        m.ingredients = ing;
        if (strict) {
            Poly r3 = check_second_column(inst, ing);
            if (!r3.is_zero()) throw SaitoConstructionFailed("column2", r3.to_string());
            auto r4 = check_third_column(inst, ing);
            if (!r4.h6_relation.is_zero()) throw SaitoConstructionFailed("h6_relation", r4.h6_relation.to_string());
            if (!r4.zero()) throw SaitoConstructionFailed("column3", r4.total.to_string());
        }
    }
    auto rep = verify_saito(inst.f, m.columns);
    if (rep.unit)
        m.unit = *rep.unit;
    else if (strict)
        throw SaitoConstructionFailed("det", rep.det_residual.to_string());
    else
        m.unit = Scalar::zero(pr.field);
    return m;
}

}  // namespace sforge
