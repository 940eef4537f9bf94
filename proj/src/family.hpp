#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace sforge {

class InvalidParams : public Error {
public:
    using Error::Error;
};

class ExhaustedRetries : public Error {
public:
    using Error::Error;
};

/// One member of the family F = x^{d-a} F1 + y^{v+a+1} F2 + x^b y^{d-b-1} z.
struct FamilyParams {
    int d = 5;
    int alpha = 0;
    int beta = 0;
    Poly f1;  ///< form in x, y of degree alpha
    Poly f2;  ///< form in x, y of degree d - v - alpha - 1
    FieldTag field = FieldTag::rationals();
    std::optional<std::uint64_t> seed;

    int v() const { return d / 2; }
    int gamma() const { return d - v() - 3 - alpha - beta; }
    int f2_degree() const { return d - v() - alpha - 1; }
    /// floor((d+1)/2) - 3, the bound on alpha + beta.
    int max_alpha_beta() const { return (d + 1) / 2 - 3; }
};

struct Condition {
    std::string name;
    bool pass = false;
    bool required = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<Condition> conditions;

    bool ok() const;
    /// Names of the failing conditions, comma separated.
    std::string failures() const;
};

/// Checks every hypothesis on (d, alpha, beta, F1, F2) plus the characteristic policy.
/// With require_squarefree = false the square-freeness of F1 is reported but not required.
ValidationReport validate(const FamilyParams& params, bool require_squarefree = true);

struct DivisorInstance {
    FamilyParams params;
    Poly f;
    std::array<Poly, 3> jacobian;  ///< (F_x, F_y, F_z)
};

/// F from the family formula, without validation.
Poly assemble_divisor(const FamilyParams& params);
/// Validates, assembles F, differentiates, and confirms the Euler identity. Throws InvalidParams.
DivisorInstance build_divisor(const FamilyParams& params, bool require_squarefree = true);
/// Instance around an arbitrary F (e.g. a hand-mutated one); params are kept for provenance.
DivisorInstance instance_with_polynomial(const FamilyParams& params, const Poly& f);

enum class SquarefreeMode { Require, Drop };

/// Random F1, F2 from a seeded generator, resampled until validation passes.
/// Integer coefficients in [-10, 10] over Q, uniform residues over F_p; edge coefficients nonzero.
/// In Drop mode F1 is forced to carry a squared linear factor whenever alpha >= 2.
FamilyParams random_instance(int d, int alpha, int beta, std::uint64_t seed, FieldTag field,
                             SquarefreeMode mode = SquarefreeMode::Require);

/// (alpha, beta) pairs allowed for d, in lexicographic order.
std::vector<std::pair<int, int>> legal_pairs(int d);

/// F linear in z: F = A + B z is irreducible iff A and B share no factor.
bool is_irreducible(const Poly& f);
inline bool is_irreducible(const DivisorInstance& inst) { return is_irreducible(inst.f); }

/// gcd of two forms in x, y, normalised monic in the dehomogenised variable.
Poly gcd_bivariate(const Poly& a, const Poly& b);

struct SupportInfo {
    std::vector<Monomial> monomials;  ///< support of F, descending
    bool intervals_disjoint = false;  ///< the x^{d-a}F1 and y^{v+a+1}F2 blocks do not overlap
    bool contained_in_family_support = false;
};
SupportInfo support_info(const DivisorInstance& inst);

}  // namespace sforge
