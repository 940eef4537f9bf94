#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace sforge {

struct VerifyOptions {
    RouteChoice route = RouteChoice::Auto;
    std::optional<int> degree_bound;  ///< resolution t_max; default 3v + 3
    bool timings = false;             ///< off by default so reports stay byte-identical
};

struct VerifyOutcome {
    Json report;
    bool pass = false;
    std::vector<std::string> failed;
};

/// Saito matrix + criterion, column identities (explicit routes), resolution, point support,
/// irreducibility and Euler. Mathematical failures land in the report, never as exceptions.
VerifyOutcome verify_instance(const DivisorInstance& inst, const VerifyOptions& opt = {});

struct Range {
    int lo = 0, hi = -1;
    bool contains(int x) const { return lo <= x && x <= hi; }
};

/// Parses "7" or "5..9".
Range parse_range(const std::string& text);

struct SweepConfig {
    Range d{5, 5};
    std::optional<Range> alpha, beta;
    int trials = 1;
    std::uint64_t seed = 0;
    FieldTag field = FieldTag::rationals();
    RouteChoice route = RouteChoice::Auto;
    bool drop_squarefree = false;
    std::optional<int> degree_bound;
    unsigned threads = 0;  ///< 0: SAITO_FORGE_THREADS or hardware concurrency
    bool timings = false;
};

struct SweepOutcome {
    Json report;
    std::size_t total = 0, passed = 0, failed = 0;
    /// Exit status convention: drop-squarefree sweeps are exploratory and never fail.
    bool any_fail() const { return failed > 0; }
};

/// Per-instance seed from (seed, d, alpha, beta, trial).
std::uint64_t instance_seed(std::uint64_t seed, int d, int alpha, int beta, int trial);

SweepOutcome run_sweep(const SweepConfig& cfg);

enum class Cas { Macaulay2, Cocoa };

/// Standalone script defining F and the Saito matrix and asserting codim J(F) = 2, perfection
/// of J(F), and det = unit * F. Falls back to the parameter-built explicit matrix for
/// instances whose F was edited.
std::string export_script(const DivisorInstance& inst, Cas cas, RouteChoice route = RouteChoice::Auto);

}  // namespace sforge
