#include "hiercon/sweep.hpp"

#include <random>
#include <string>

#include "hiercon/errors.hpp"
#include "hiercon/rng.hpp"

namespace hiercon {

namespace {

void check_range(const NRange& r) {
    if (r.start <= 2 || r.stop < r.start || r.stride < 1)
        throw Error(errc::invalid_parameter,
                    "size range must satisfy start > 2, stop >= start, stride >= 1");
}

Vector sample_uniform(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = unit(rng);
    return v;
}

SimOutcome simulate_record(const MixedGraph& m, const GainPair& gains, Protocol protocol,
                           const VerdictResult& spectral, const SimulationConfig& cfg,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Vector x0 = sample_uniform(m.n(), rng);
    const Vector v0 = sample_uniform(m.n(), rng);
    const SimulationTrace trace = simulate(m, gains, protocol, x0, v0, cfg);
    return {trace.verdict, trace.verdict_time,
            classify_consistency(trace.verdict, spectral.verdict)};
}

}  // namespace

MixedGraph build_family_instance(const FamilySpec& spec, int n) {
    const std::uint64_t seed = derive_seed(spec.seed, static_cast<std::uint64_t>(n));
    return std::visit(
        [&](const auto& family) -> MixedGraph {
            using F = std::decay_t<decltype(family)>;
            if constexpr (std::is_same_v<F, PathRingFamily>) {
                return add_reverse_edges(gen_path(n, family.weight),
                                         {{1, n, family.reverse_weight}});
            } else if constexpr (std::is_same_v<F, StarFamily>) {
                return gen_random_star_mixed(n, family.rho, family.reverse_weights, seed,
                                             family.max_reverse);
            } else {
                static_assert(std::is_same_v<F, RandomMixedFamily>);
                return gen_random_mixed_capped(n, family.dag_density, family.zeta_cap,
                                               family.xi_cap, family.weights, seed);
            }
        },
        spec.family);
}

SweepResult run_sweep(const FamilySpec& spec, const GainPair& gains, bool simulate_flag,
                      const SimulationConfig& cfg) {
    check_range(spec.n_range);
    SweepResult result;
    for (int n = spec.n_range.start; n <= spec.n_range.stop; n += spec.n_range.stride) {
        try {
            const MixedGraph m = build_family_instance(spec, n);
            const LaplacianDecomposition lap = laplacian(m);

            SweepRecord rec;
            rec.n = n;
            if (lap.span) rec.s = lap.span->s;
            const SpectralReport report = make_spectral_report(m);
            rec.spectrum = report.spectrum;
            rec.abs_criterion = report.abs_criterion;
            rec.rel_criterion = report.rel_criterion;
            rec.gershgorin_bound = report.gershgorin_bound;
            rec.abs_verdict = consensus_verdict(report, gains, Protocol::Absolute);
            rec.rel_verdict = consensus_verdict(report, gains, Protocol::Relative);

            if (simulate_flag) {
                const std::uint64_t sim_seed =
                    derive_seed(spec.seed, static_cast<std::uint64_t>(n) | (1ULL << 32));
                rec.abs_sim = simulate_record(m, gains, Protocol::Absolute, rec.abs_verdict,
                                              cfg, sim_seed);
                rec.rel_sim = simulate_record(m, gains, Protocol::Relative, rec.rel_verdict,
                                              cfg, sim_seed);
            }

            if (rec.abs_verdict.verdict == Verdict::NoConsensus && !result.breaking_abs)
                result.breaking_abs = n;
            if (rec.rel_verdict.verdict == Verdict::NoConsensus && !result.breaking_rel)
                result.breaking_rel = n;
            if (rec.abs_verdict.verdict == Verdict::Boundary) result.boundary_abs.push_back(n);
            if (rec.rel_verdict.verdict == Verdict::Boundary) result.boundary_rel.push_back(n);
            result.records.push_back(std::move(rec));
        } catch (const Error& e) {
            throw Error(e.code(), "at family size n=" + std::to_string(n) + ": " + e.what());
        }
    }
    return result;
}

BreakingSearch find_breaking_size(const FamilySpec& spec, const GainPair& gains,
                                  Protocol protocol, int n_cap) {
    check_range(spec.n_range);
    if (n_cap < spec.n_range.start)
        throw Error(errc::invalid_parameter, "n_cap must be >= the range start");
    BreakingSearch search;
    for (int n = spec.n_range.start; n <= n_cap; n += spec.n_range.stride) {
        try {
            const MixedGraph m = build_family_instance(spec, n);
            const VerdictResult res =
                consensus_verdict(make_spectral_report(m), gains, protocol);
            if (res.verdict == Verdict::NoConsensus) {
                search.breaking = n;
                return search;
            }
            if (res.verdict == Verdict::Boundary) search.boundary.push_back(n);
        } catch (const Error& e) {
            throw Error(e.code(), "at family size n=" + std::to_string(n) + ": " + e.what());
        }
    }
    return search;
}

}  // namespace hiercon
