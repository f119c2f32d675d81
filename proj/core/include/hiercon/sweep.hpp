#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hiercon/dynamics.hpp"
#include "hiercon/graph.hpp"
#include "hiercon/spectral.hpp"

namespace hiercon {

/// Inclusive size range walked by a sweep.
struct NRange {
    int start = 3;
    int stop = 3;
    int stride = 1;
};

/// Directed path with one full-span unit-style reverse edge (n, ..., 1 plus
/// n -> 1): the family whose relative criterion grows without bound.
struct PathRingFamily {
    double weight = 1.0;
    double reverse_weight = 1.0;
};

/// Uniform star with seeded random reverse edges; count and weights are
/// unrestricted.
struct StarFamily {
    double rho = 1.0;
    WeightBounds reverse_weights{0.1, 2.0};
    int max_reverse = -1;  // <0: up to all pairs
};

/// Random mixed graphs with per-vertex neighbor caps so the whole family
/// satisfies one AssumptionParams bound.
struct RandomMixedFamily {
    double dag_density = 0.15;
    int zeta_cap = 3;
    int xi_cap = 3;
    WeightBounds weights{0.05, 2.0};
};

struct FamilySpec {
    std::variant<PathRingFamily, StarFamily, RandomMixedFamily> family;
    NRange n_range;
    std::uint64_t seed = 0;  // master seed; per-n seeds are derived from it
};

struct SimOutcome {
    TraceVerdict verdict = TraceVerdict::Undecided;
    double time = 0.0;
    Consistency consistency = Consistency::Inconclusive;
};

struct SweepRecord {
    int n = 0;
    std::optional<int> s;  // reverse span, when the instance has reverse edges
    double abs_criterion = 0.0;
    double rel_criterion = 0.0;
    double gershgorin_bound = 0.0;
    VerdictResult abs_verdict;
    VerdictResult rel_verdict;
    Spectrum spectrum;
    std::optional<SimOutcome> abs_sim;
    std::optional<SimOutcome> rel_sim;
};

struct SweepResult {
    std::vector<SweepRecord> records;
    std::optional<int> breaking_abs;
    std::optional<int> breaking_rel;
    std::vector<int> boundary_abs;
    std::vector<int> boundary_rel;
};

struct BreakingSearch {
    std::optional<int> breaking;
    std::vector<int> boundary;  // Boundary sizes are skipped, not counted
};

/// Builds the family's instance of size n (deterministic in spec.seed).
MixedGraph build_family_instance(const FamilySpec& spec, int n);

/// Spectral analysis of every size in the range under fixed gains; with
/// simulate_flag also runs both protocols from seeded initial conditions
/// and records consistency against the spectral verdicts.
SweepResult run_sweep(const FamilySpec& spec, const GainPair& gains, bool simulate_flag,
                      const SimulationConfig& cfg);

/// Smallest n <= n_cap whose spectral verdict is NoConsensus for the given
/// protocol, walking the family from n_range.start.
BreakingSearch find_breaking_size(const FamilySpec& spec, const GainPair& gains,
                                  Protocol protocol, int n_cap);

}  // namespace hiercon
