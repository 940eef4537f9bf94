#include "oracle.hpp"

#include <algorithm>

namespace sforge {

namespace {

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// C(t+2, 2): number of monomials of degree t in three variables.
std::size_t count3(int t) { return t < 0 ? 0 : static_cast<std::size_t>((t + 1) * (t + 2) / 2); }

void fill_column(Matrix& m, std::size_t col, const Poly& p) {
    for (const auto& [mono, c] : p.terms()) m(monomial_index3(mono), col) = c;
}

Poly poly_from_block(const Vector& v, std::size_t offset, int t, FieldTag tag) {
    Poly p(tag, 3);
    if (t < 0) return p;
    auto monos = monomials_of_degree(t, 3);
    for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], v[offset + i]);
    return p;
}

Syzygy euler_syzygy(const Poly& f) {
    FieldTag k = f.field();
    int d = *f.degree();
    return Syzygy{{Poly::variable(k, X), Poly::variable(k, Y), Poly::variable(k, Z),
                   Poly::constant(Scalar(k, static_cast<long>(-d)))}};
}

Syzygy scale(const Syzygy& s, const Monomial& m) {
    Syzygy out;
    for (int i = 0; i < 4; ++i) out.comps[static_cast<std::size_t>(i)] = s.comps[static_cast<std::size_t>(i)].times_monomial(m);
    return out;
}

std::size_t e_support(const Vector& v, int t) {
    std::size_t off = 3 * count3(t), n = 0;
    for (std::size_t i = off; i < v.size(); ++i) n += v[i].is_zero() ? 0 : 1;
    return n;
}

}  // namespace

Vector coefficient_vector(const Poly& p, int t) {
    Vector v(count3(t), Scalar::zero(p.field()));
    for (const auto& [mono, c] : p.terms()) v[monomial_index3(mono)] = c;
    return v;
}

MacaulayMatrix macaulay_matrix(const std::vector<Poly>& gens, int t) {
    FieldTag k = gens.empty() ? FieldTag::rationals() : gens.front().field();
    std::vector<std::pair<std::size_t, Monomial>> cols;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].is_zero()) continue;
        int s = t - *gens[g].degree();
        for (const auto& m : monomials_of_degree(s, 3)) cols.emplace_back(g, m);
    }
    Matrix mat(k, count3(t), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        fill_column(mat, j, gens[cols[j].first].times_monomial(cols[j].second));
    return MacaulayMatrix{gens, t, std::move(cols), std::move(mat)};
}

std::size_t ideal_dim(const std::vector<Poly>& gens, int t) {
    if (t < 0) return 0;
    auto mm = macaulay_matrix(gens, t);
    if (mm.matrix.cols() == 0) return 0;
    return rank(mm.matrix);
}

long hilbert_function_quotient(const std::vector<Poly>& gens, int t) {
    return static_cast<long>(count3(t)) - static_cast<long>(ideal_dim(gens, t));
}

std::vector<Poly> jacobian_generators(const Poly& f) {
    return {f.partial(X), f.partial(Y), f.partial(Z), f};
}

SyzygyBasis syzygy_kernel(const Poly& f, int t) {
    FieldTag k = f.field();
    int d = *f.degree();
    auto grad = gradient(f);
    std::size_t nt = count3(t), ne = count3(t - 1);
    int target = t + d - 1;
    Matrix mat(k, count3(target), 3 * nt + ne);
    auto monos = monomials_of_degree(t, 3);
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < nt; ++i) fill_column(mat, c * nt + i, grad[c].times_monomial(monos[i]));
    auto emonos = monomials_of_degree(t - 1, 3);
    for (std::size_t i = 0; i < ne; ++i) fill_column(mat, 3 * nt + i, f.times_monomial(emonos[i]));

    SyzygyBasis out;
    out.degree = t;
    for (const auto& v : nullspace(mat)) {
        Syzygy s;
        for (std::size_t c = 0; c < 3; ++c) s.comps[c] = poly_from_block(v, c * nt, t, k);
        s.comps[3] = poly_from_block(v, 3 * nt, t - 1, k);
        out.basis.push_back(std::move(s));
    }
    return out;
}

Vector syzygy_vector(const Syzygy& s, int t) {
    FieldTag k = s.comps[0].field();
    std::size_t nt = count3(t);
    Vector v(3 * nt + count3(t - 1), Scalar::zero(k));
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t off = c * nt;
        for (const auto& [mono, coef] : s.comps[c].terms()) v[off + monomial_index3(mono)] = coef;
    }
    return v;
}

std::optional<Syzygy> complete_syzygy(const Poly& f, const PolyColumn& col) {
    Poly g = dot(gradient(f), col);
    Syzygy s{{col[0], col[1], col[2], Poly(f.field(), 3)}};
    if (g.is_zero()) return s;
    auto q = divides(f, g);
    if (!q) return std::nullopt;
    s.comps[3] = -*q;
    return s;
}

bool in_kernel_span(const Poly& f, const PolyColumn& col, int t) {
    auto s = complete_syzygy(f, col);
    if (!s) return false;
    SyzygyBasis kb = syzygy_kernel(f, t);
    std::size_t n = 3 * count3(t) + count3(t - 1);
    EchelonSpan span(f.field(), n);
    for (const auto& b : kb.basis) span.insert(syzygy_vector(b, t));
    return span.contains(syzygy_vector(*s, t));
}

std::vector<FreshSyzygy> fresh_syzygies(const Poly& f, int t_max) {
    std::vector<FreshSyzygy> gens{{1, euler_syzygy(f)}};
    for (int t = 1; t <= t_max; ++t) {
        std::size_t n = 3 * count3(t) + count3(t - 1);
        EchelonSpan span(f.field(), n);
        for (const auto& g : gens)
            for (const auto& m : monomials_of_degree(t - g.degree, 3)) span.insert(syzygy_vector(scale(g.syzygy, m), t));
        SyzygyBasis kb = syzygy_kernel(f, t);
        if (span.dimension() == kb.basis.size()) continue;
        std::vector<std::pair<std::size_t, Vector>> cand;
        for (const auto& b : kb.basis) {
            Vector v = syzygy_vector(b, t);
            cand.emplace_back(e_support(v, t), std::move(v));
        }
        std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (span.insert(cand[i].second)) {
                // Recover the polynomial form from the ordered kernel basis.
                const Vector& v = cand[i].second;
                Syzygy s;
                std::size_t nt = count3(t);
                for (std::size_t c = 0; c < 3; ++c) s.comps[c] = poly_from_block(v, c * nt, t, f.field());
                s.comps[3] = poly_from_block(v, 3 * nt, t - 1, f.field());
                gens.push_back({t, std::move(s)});
            }
        }
    }
    gens.erase(gens.begin());
    return gens;
}

long predicted_hilbert(int d, int t) {
    int v = d / 2;
    std::vector<std::pair<int, long>> num;
    if (d % 2 == 1)
        num = {{0, 1}, {2 * v, -3}, {3 * v, 2}};
    else
        num = {{0, 1}, {2 * v - 1, -3}, {3 * v - 2, 1}, {3 * v - 1, 1}};
    long h = 0;
    for (auto [k, c] : num)
        if (t >= k) h += c * binom2(t - k + 2);
    return h;
}

long predicted_multiplicity(int d) {
    long v = d / 2;
    return d % 2 == 1 ? 3 * v * v : 3 * v * v - 3 * v + 1;
}

ResolutionReport resolution_check(const Poly& f, int t_max) {
    int d = *f.degree();
    int v = d / 2;
    if (t_max < 3 * v + 3) throw Error("resolution_check: t_max must be at least 3v + 3");
    ResolutionReport r;
    r.d = d;
    r.t_max = t_max;
    r.expected_multiplicity = predicted_multiplicity(d);
    auto gens = jacobian_generators(f);
    for (int t = 0; t <= t_max; ++t) {
        r.computed.push_back(hilbert_function_quotient(gens, t));
        r.predicted.push_back(predicted_hilbert(d, t));
        if (!r.first_mismatch && r.computed.back() != r.predicted.back()) r.first_mismatch = t;
    }
    r.stabilized = r.computed.back();
    r.pass = !r.first_mismatch.has_value();
    return r;
}

bool ideal_contains(const std::vector<Poly>& gens, const Poly& p) {
    if (p.is_zero()) return true;
    int t = *p.degree();
    auto mm = macaulay_matrix(gens, t);
    Matrix aug(mm.matrix.field(), mm.matrix.rows(), mm.matrix.cols() + 1);
    for (std::size_t i = 0; i < aug.rows(); ++i)
        for (std::size_t j = 0; j < mm.matrix.cols(); ++j) aug(i, j) = mm.matrix(i, j);
    aug.set_column(mm.matrix.cols(), coefficient_vector(p, t));
    auto rr = rref(aug);
    return rr.pivots.empty() || rr.pivots.back() != mm.matrix.cols();
}

PointSupportReport point_support_check(const Poly& f, int t_bound) {
    int v = *f.degree() / 2;
    if (t_bound < 3 * v + 2) throw Error("point_support_check: t_bound must be at least 3v + 2");
    FieldTag k = f.field();
    auto gens = jacobian_generators(f);
    auto both_in = [&](int n) {
        return ideal_contains(gens, Poly::monomial(k, Monomial(n, 0, 0))) &&
               ideal_contains(gens, Poly::monomial(k, Monomial(0, n, 0)));
    };
    PointSupportReport r;
    r.bound = t_bound;
    // Membership is monotone in N, so bisect for the least N.
    if (!both_in(t_bound)) {
        r.status = "BoundTooSmall";
        return r;
    }
    int lo = 1, hi = t_bound;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (both_in(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    r.certified = true;
    r.n = lo;
    r.status = "certified";
    return r;
}

ProbeReport freeness_probe(const Poly& f, int degree_bound, std::optional<std::pair<int, int>> degrees) {
    ProbeReport r;
    r.degree_bound = degree_bound;
    int d = *f.degree();
    FieldTag k = f.field();
    int search_to = degree_bound;
    if (degrees) search_to = std::min(degree_bound, std::max(degrees->first, degrees->second));
    // With the Euler column fixed the other two degrees sum to d - 1.
    search_to = std::min(search_to, d - 2);
    auto fresh = fresh_syzygies(f, search_to);
    for (const auto& g : fresh) {
        if (r.fresh_counts.empty() || r.fresh_counts.back().first != g.degree)
            r.fresh_counts.emplace_back(g.degree, 0);
        ++r.fresh_counts.back().second;
    }
    PolyColumn euler{Poly::variable(k, X), Poly::variable(k, Y), Poly::variable(k, Z)};
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        for (std::size_t j = i + 1; j < fresh.size(); ++j) {
            int ti = fresh[i].degree, tj = fresh[j].degree;
            if (ti + tj != d - 1) continue;
            if (degrees && !((ti == degrees->first && tj == degrees->second) ||
                             (ti == degrees->second && tj == degrees->first)))
                continue;
            PolyColumn ci = fresh[i].syzygy.column(), cj = fresh[j].syzygy.column();
            Poly det = det3(euler, ci, cj);
            if (det.is_zero()) continue;
            auto q = divides(f, det);
            if (!q || q->is_zero() || *q->degree() != 0) continue;
            r.success = true;
            r.column_degrees = {1, ti, tj};
            r.matrix = std::array<PolyColumn, 3>{euler, ci, cj};
            r.unit = q->leading().second;
            return r;
        }
    }
    return r;
}

}  // namespace sforge
