#include "linalg.hpp"

namespace sforge {

namespace {

// Raw-element kernels; Scalar's variant dispatch is too slow for the inner loops.
struct PrimeOps {
    using T = std::uint64_t;
    std::uint64_t p;
    T from(const Scalar& s) const { return s.residue(); }
    Scalar to(FieldTag tag, T v) const {
        return Scalar(tag, mpz_class(static_cast<unsigned long>(v)));
    }
    bool is_zero(const T& v) const { return v == 0; }
    T mul(T a, T b) const { return static_cast<T>((static_cast<unsigned __int128>(a) * b) % p); }
    T inv(T a) const { return inverse_mod(a, p); }
    // a -= c * b
    void axpy(T& a, T c, T b) const {
        T prod = mul(c, b);
        a = a >= prod ? a - prod : a + p - prod;
    }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
};

struct RationalOps {
    using T = mpq_class;
    T from(const Scalar& s) const { return s.rational(); }
    Scalar to(FieldTag tag, const T& v) const {
        return Scalar(tag, v.get_num(), v.get_den());
    }
    bool is_zero(const T& v) const { return sgn(v) == 0; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return 1 / a; }
    void axpy(T& a, const T& c, const T& b) const { a -= c * b; }
    T neg(const T& a) const { return -a; }
};

template <class Ops>
std::vector<std::size_t> rref_raw(std::vector<typename Ops::T>& a, std::size_t rows, std::size_t cols,
                                  const Ops& ops) {
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!ops.is_zero(a[i * cols + c])) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        T inv = ops.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            T f = a[i * cols + c];
            if (ops.is_zero(f)) continue;
            for (std::size_t j = c; j < cols; ++j) {
                if (ops.is_zero(a[r * cols + j])) continue;
                ops.axpy(a[i * cols + j], f, a[r * cols + j]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Ops>
Rref rref_with(const Matrix& m, const Ops& ops) {
    using T = typename Ops::T;
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<T> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = ops.from(m(i, j));
    auto pivots = rref_raw(a, rows, cols, ops);
    Matrix out(m.field(), rows, cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!ops.is_zero(a[i * cols + j])) out(i, j) = ops.to(m.field(), a[i * cols + j]);
    return Rref{std::move(out), std::move(pivots)};
}

}  // namespace

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::apply(const Vector& x) const {
    Vector out(rows_, Scalar::zero(tag_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& e = (*this)(r, c);
            if (!e.is_zero() && !x[c].is_zero()) out[r] += e * x[c];
        }
    return out;
}

Rref rref(const Matrix& m) {
    if (m.field().is_rational()) return rref_with(m, RationalOps{});
    return rref_with(m, PrimeOps{m.field().modulus()});
}

std::size_t rank(const Matrix& m) {
    if (m.field().is_rational()) return rank_fraction_free(m);
    return rref(m).pivots.size();
}

std::size_t rank_fraction_free(const Matrix& m) {
    if (!m.field().is_rational()) return rref(m).pivots.size();
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm(1);
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = m(i, j).rational();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = m(i, j).rational();
            a[i * cols + j] = q.get_num() * (lcm / q.get_den());
        }
    }
    // Bareiss: every division by the previous pivot is exact.
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(a[i * cols + c]) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const mpz_class pv = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpz_class f = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class& e = a[i * cols + j];
                e = pv * e - f * a[r * cols + j];
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * cols + c] = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

std::vector<Vector> nullspace(const Matrix& m) {
    Rref rr = rref(m);
    const FieldTag& tag = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols(), Scalar::zero(tag));
        v[f] = Scalar::one(tag);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            const Scalar& e = rr.reduced(i, f);
            if (!e.is_zero()) v[rr.pivots[i]] = -e;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Solution> solve(const Matrix& m, const Vector& b) {
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Rref rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Solution sol;
    sol.particular.assign(m.cols(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) sol.particular[rr.pivots[i]] = rr.reduced(i, m.cols());
    sol.kernel = nullspace(m);
    return sol;
}

bool is_zero_vector(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vector EchelonSpan::reduce(Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = pivots_[i];
        if (v[p].is_zero()) continue;
        Scalar f = v[p];
        const Vector& row = rows_[i];
        for (std::size_t j = p; j < n_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

bool EchelonSpan::contains(const Vector& v) const {
    return is_zero_vector(reduce(v));
}

bool EchelonSpan::insert(const Vector& v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    Scalar inv = r[p].inverse();
    for (std::size_t j = p; j < n_; ++j) r[j] *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace sforge
