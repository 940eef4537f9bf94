#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "field.hpp"

namespace sforge {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(FieldTag tag, std::size_t rows, std::size_t cols)
        : tag_(tag), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(tag)) {}

    const FieldTag& field() const { return tag_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);
    Vector apply(const Vector& x) const;

private:
    FieldTag tag_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row, increasing
};

/// Reduced row-echelon form by Gauss-Jordan with first-nonzero pivoting (deterministic).
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rank over Q by fraction-free (Bareiss) elimination on the denominator-cleared matrix.
std::size_t rank_fraction_free(const Matrix& m);

/// Basis of {x : m x = 0}: one vector per free column, that column set to 1.
std::vector<Vector> nullspace(const Matrix& m);

struct Solution {
    Vector particular;            ///< free variables set to zero
    std::vector<Vector> kernel;   ///< nullspace basis
};
/// Solves m x = b; nullopt if inconsistent.
std::optional<Solution> solve(const Matrix& m, const Vector& b);

/// Incrementally maintained echelon basis of a subspace of K^n.
class EchelonSpan {
public:
    EchelonSpan(FieldTag tag, std::size_t n) : tag_(tag), n_(n) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    bool contains(const Vector& v) const;
    /// Returns true if v was independent of the span (and is now part of it).
    bool insert(const Vector& v);

private:
    Vector reduce(Vector v) const;

    FieldTag tag_;
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const Vector& v);

}  // namespace sforge
