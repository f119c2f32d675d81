#pragma once

#include <span>
#include <vector>

#include "hiercon/graph.hpp"
#include "hiercon/laplacian.hpp"
#include "hiercon/spectral.hpp"

namespace hiercon {

struct AgentState {
    double x = 0.0;  // position-like
    double v = 0.0;  // velocity-like
};

struct SimulationConfig {
    double dt = 1e-3;
    double t_max = 200.0;
    double conv_tol = 1e-6;
    double div_tol = 1e6;
    int sample_stride = 100;

    static constexpr double overflow_guard = 1e12;
};

enum class TraceVerdict { Converged, Diverged, Undecided };

/// Sampled closed-loop trajectory with disagreement metrics. verdict_time is
/// the first instant the convergence/divergence threshold fired, or t_max
/// for Undecided. overflow marks divergence detected by the state magnitude
/// guard rather than the disagreement threshold.
struct SimulationTrace {
    std::vector<double> times;
    std::vector<Vector> positions;
    std::vector<Vector> velocities;
    std::vector<double> pos_disagreement;
    std::vector<double> vel_disagreement;
    TraceVerdict verdict = TraceVerdict::Undecided;
    double verdict_time = 0.0;
    bool overflow = false;
};

enum class Consistency { Agree, Disagree, Inconclusive };

/// Accelerations commanded by the chosen protocol at the given states,
/// evaluated by summing over the mixed graph's edges (DAG plus reverse).
std::vector<double> control_input(const MixedGraph& m, const GainPair& gains,
                                  Protocol protocol, std::span<const AgentState> states);

/// Fixed-step classical RK4 integration of the closed-loop double-integrator
/// system. Halts at the first step whose disagreements settle the verdict.
SimulationTrace simulate(const MixedGraph& m, const GainPair& gains, Protocol protocol,
                         const Vector& x0, const Vector& v0, const SimulationConfig& cfg);

/// Nonnegative left null vector w of the mixed-graph Laplacian, scaled to
/// sum 1. Requires a spanning tree (simple zero eigenvalue).
Vector left_zero_eigenvector(const MixedGraph& m);

/// Cross-validation of a simulation outcome against a spectral verdict on
/// the same instance, gains and protocol.
Consistency classify_consistency(TraceVerdict trace, Verdict spectral);

}  // namespace hiercon
