#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace sforge {

/// Degree-t piece of the ideal generated by `gens`, as a matrix: one row per monomial of
/// degree t, one column per (generator, multiplier monomial) pair.
struct MacaulayMatrix {
    std::vector<Poly> generators;
    int degree = 0;
    std::vector<std::pair<std::size_t, Monomial>> columns;
    Matrix matrix;
};

MacaulayMatrix macaulay_matrix(const std::vector<Poly>& gens, int t);
/// Coefficient vector of a form of degree t in the monomial basis of degree t.
Vector coefficient_vector(const Poly& p, int t);

/// dim of the degree-t piece of the ideal.
std::size_t ideal_dim(const std::vector<Poly>& gens, int t);
/// C(t+2, 2) - ideal_dim.
long hilbert_function_quotient(const std::vector<Poly>& gens, int t);

/// (F_x, F_y, F_z, F).
std::vector<Poly> jacobian_generators(const Poly& f);

/// (a, b, c, e) with a F_x + b F_y + c F_z + e F = 0; deg a = deg b = deg c = t, deg e = t - 1.
struct Syzygy {
    std::array<Poly, 4> comps;
    PolyColumn column() const { return {comps[0], comps[1], comps[2]}; }
};

struct SyzygyBasis {
    int degree = 0;
    std::vector<Syzygy> basis;
};

/// Kernel basis of (a, b, c, e) -> a F_x + b F_y + c F_z + e F at degree t (fixed pivot order).
SyzygyBasis syzygy_kernel(const Poly& f, int t);

/// Coordinates of (a, b, c, e) in the layout used by syzygy_kernel at degree t.
Vector syzygy_vector(const Syzygy& s, int t);
/// Completes a column to a syzygy by solving for e; nullopt unless grad F . col is a multiple of F.
std::optional<Syzygy> complete_syzygy(const Poly& f, const PolyColumn& col);
/// Whether the column (with its e-component) lies in the span of syzygy_kernel(f, t).
bool in_kernel_span(const Poly& f, const PolyColumn& col, int t);

struct FreshSyzygy {
    int degree = 0;
    Syzygy syzygy;
};

/// Minimal generators of the mod-F syzygy module found degree by degree up to t_max:
/// at each degree, kernel vectors outside the span of multiples of earlier generators.
/// The Euler vector is seeded as the first generator and is not reported.
std::vector<FreshSyzygy> fresh_syzygies(const Poly& f, int t_max);

/// (1 - 3z^{2v} + 2z^{3v}) for d = 2v+1, (1 - 3z^{2v-1} + z^{3v-2} + z^{3v-1}) for d = 2v,
/// expanded over (1-z)^3.
long predicted_hilbert(int d, int t);
/// 3v^2 (d odd), 3v^2 - 3v + 1 (d even).
long predicted_multiplicity(int d);

struct ResolutionReport {
    int d = 0;
    int t_max = 0;
    std::vector<long> computed;
    std::vector<long> predicted;
    std::optional<int> first_mismatch;
    long stabilized = 0;
    long expected_multiplicity = 0;
    bool pass = false;
};

ResolutionReport resolution_check(const Poly& f, int t_max);

/// Whether p lies in the degree-(deg p) piece of the ideal, by rank comparison.
bool ideal_contains(const std::vector<Poly>& gens, const Poly& p);

struct PointSupportReport {
    bool certified = false;
    std::optional<int> n;  ///< least N with x^N, y^N in J(F)
    int bound = 0;
    std::string status;    ///< "certified" or "BoundTooSmall"
};

PointSupportReport point_support_check(const Poly& f, int t_bound);

struct ProbeReport {
    bool success = false;
    int degree_bound = 0;
    std::vector<int> column_degrees;         ///< (1, t2, t3) on success
    std::optional<std::array<PolyColumn, 3>> matrix;
    std::optional<Scalar> unit;              ///< det = unit * F
    std::vector<std::pair<int, int>> fresh_counts;  ///< (degree, number of fresh generators)
};

/// Searches Euler + two fresh syzygies with det = c F, c a nonzero constant.
/// When `degrees` is given only that pair of column degrees is tried.
ProbeReport freeness_probe(const Poly& f, int degree_bound,
                           std::optional<std::pair<int, int>> degrees = std::nullopt);

}  // namespace sforge
