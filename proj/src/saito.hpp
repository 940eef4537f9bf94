#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "family.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace sforge {

class NoSolution : public Error {
public:
    using Error::Error;
};

class DegenerateConstant : public Error {
public:
    using Error::Error;
};

/// Raised when an assembled matrix fails one of its identities; `which` names the identity
/// and `residual` is its canonical text.
class SaitoConstructionFailed : public Error {
public:
    SaitoConstructionFailed(std::string which, std::string residual)
        : Error("Saito construction failed: " + which + " residual " + residual),
          which_(std::move(which)),
          residual_(std::move(residual)) {}
    const std::string& which() const { return which_; }
    const std::string& residual() const { return residual_; }

private:
    std::string which_, residual_;
};

// ---------------------------------------------------------------------------
// The graded bivariate system
//
//   [ -G2        x G1                      0              ] [H1]   [  mu y^{v+a}   ]
//   [ y F2_x     y F2_y + (d-v+a) F2       x^b y^{v-a-b}  ] [H3] = [ -mu x^{2v-a}  ]
//                                                           [H5]
// with G1 = F1_y, G2 = -(x F1_x + (d-a) F1), unknowns of degree v. Defined for odd d.
// ---------------------------------------------------------------------------

struct GradedSystem {
    std::array<std::array<Poly, 3>, 2> rows;
    std::array<Poly, 2> rhs;
    int unknown_degree = 0;
    Scalar mu;
};

GradedSystem build_graded_system(const FamilyParams& params, const Scalar& mu);

struct GradedSolution {
    Poly h1, h3, h5;
    /// Homogeneous solutions, each a triple of degree-v forms.
    std::vector<std::array<Poly, 3>> kernel;
};

/// One exact solution with every free coordinate set to zero (reduced row-echelon pivoting
/// over the descending monomial order). Throws NoSolution.
GradedSolution solve_graded_system(const GradedSystem& sys);

/// Applies the coefficient matrix to (H1, H3, H5).
std::array<Poly, 2> apply_graded_rows(const GradedSystem& sys, const std::array<Poly, 3>& h);

/// (x^{b+1} y^{v-a-b} G1, x^b y^{v-a-b} G2, -xy F2_x G1 - G2((d-v+a) F2 + y F2_y)).
std::array<Poly, 3> graded_syzygy_generator(const FamilyParams& params);

/// dim of the degree-i piece of (S(-(v-a)) + S(-a)) / N over S = K[x, y], by rank.
long graded_module_hilbert(const FamilyParams& params, int i);
/// Coefficient of z^i in (z^a + z^{v-a} - 3 z^v + z^{2v}) / (1 - z)^2.
long graded_module_hilbert_series(const FamilyParams& params, int i);

// ---------------------------------------------------------------------------
// Explicit construction
// ---------------------------------------------------------------------------

struct Constants {
    Scalar a, b, mu;
    std::optional<Scalar> lambda;        ///< beta = 0 only: lambda = -a
    std::optional<Scalar> mu_unsquared;  ///< same closed form with [F1|y^a] unsquared, for comparison
};

/// b := 1 (beta >= 1) and mu, a from the vanishing of the pure powers y^{v+1}, x^{v+1} in
/// the H6 identity. For beta = 0 that identity forces b = 0; mu := 1.
Constants compute_constants(const FamilyParams& params);

/// beta = 0: the third column is affine in a (E = a x); solves grad F . col = 0 for a by
/// coefficient comparison. `solution_set` receives "point", "line" or "empty".
std::optional<Scalar> solve_beta_zero_constant(const DivisorInstance& inst, std::string* solution_set = nullptr);

/// Named polynomials the explicit columns are assembled from.
struct Ingredients {
    Poly g1, g2, g3, w, e;
    Poly h1, h2, h3, h4, h5, h6;
    Poly v1, u1, w1, w2;  ///< pieces of H6
};

enum class Route { ExplicitOdd, ExplicitBetaZero, ExplicitEvenProbe, Oracle };
enum class RouteChoice { Auto, Explicit, Oracle };

std::string route_name(Route r);

struct Note {
    std::string key;
    std::string value;
};

/// 3x3 polynomial matrix B (columns) with det(B) = unit * F.
struct SaitoMatrix {
    std::array<PolyColumn, 3> columns;
    Scalar unit;
    Route route = Route::Oracle;
    std::optional<Ingredients> ingredients;
    std::optional<Constants> constants;
    std::vector<Note> notes;

    /// Column 3 divided by the unit, so det equals F exactly.
    std::array<PolyColumn, 3> normalized() const;
};

/// Computes every ingredient for an odd-d instance.
Ingredients compute_ingredients(const DivisorInstance& inst, const Constants& k, std::vector<Note>* notes = nullptr);
/// (x, y, z) and the two explicit columns, from the ingredients.
std::array<PolyColumn, 3> assemble_columns(const FamilyParams& params, const Ingredients& ing);

/// grad F . (second column); zero for a correct construction.
Poly check_second_column(const DivisorInstance& inst, const Ingredients& ing);

struct ThirdColumnResidual {
    Poly total;       ///< grad F . (third column)
    Poly z2, z1, z0;  ///< coefficients of z^2, z, 1 in `total`
    Poly h6_relation;         ///< b y H1 + xy F2_x H2 + (d-b-1) x H3 + (y F2_y + (d-v+a) F2) H4 + xy H6
    Poly g_identity;  ///< G1 H4 - G2 H2
    bool zero() const { return total.is_zero() && z2.is_zero() && z1.is_zero() && z0.is_zero(); }
};

ThirdColumnResidual check_third_column(const DivisorInstance& inst, const Ingredients& ing);

/// Route Auto: explicit formulas for odd d, oracle for even d. The explicit columns are built
/// from the family parameters; with `strict` a column failing its identity against inst.f
/// raises SaitoConstructionFailed, otherwise the matrix is returned for reporting.
SaitoMatrix build_saito_matrix(const DivisorInstance& inst, RouteChoice choice = RouteChoice::Auto,
                               bool strict = true);

/// Oracle route: Euler column plus fresh kernel syzygies of degrees (v, v) for odd d,
/// (v-1, v) for even d.
SaitoMatrix oracle_saito_matrix(const Poly& f);

struct EvenProbeReport {
    bool success = false;
    std::optional<Poly> e;  ///< quadratic E
    std::optional<std::array<PolyColumn, 3>> columns;
    std::size_t solution_dimension = 0;
};

/// Experimental: even d, search a third column of the odd-d shape with quadratic E by
/// solving the linear conditions for (H1, H3, H5, H6, E) and det = F.
EvenProbeReport probe_even_quadratic(const DivisorInstance& inst);

struct SaitoReport {
    bool pass = false;
    Poly det;
    std::optional<Scalar> unit;
    std::array<std::optional<Poly>, 3> quotients;  ///< grad F . col_k = q_k F
    std::vector<int> column_degrees;
    Poly det_residual;  ///< det - unit * F (or det - c F with c matched on the leading term)
};

/// Saito's criterion: det(B) = c F with c a nonzero constant and grad F . col_k in (F).
SaitoReport verify_saito(const Poly& f, const std::array<PolyColumn, 3>& columns);

}  // namespace sforge
