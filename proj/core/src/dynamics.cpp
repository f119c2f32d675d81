#include "hiercon/dynamics.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <string>

#include "hiercon/errors.hpp"

namespace hiercon {

std::vector<double> control_input(const MixedGraph& m, const GainPair& gains,
                                  Protocol protocol, std::span<const AgentState> states) {
    const int n = m.n();
    if (static_cast<int>(states.size()) != n)
        throw Error(errc::dimension_mismatch, "expected " + std::to_string(n) + " states, got " +
                                                  std::to_string(states.size()));
    std::vector<double> u(n, 0.0);
    auto accumulate = [&](const Edge& e) {
        const AgentState& self = states[e.child - 1];
        const AgentState& nb = states[e.parent - 1];
        u[e.child - 1] += gains.alpha * e.weight * (nb.x - self.x);
        if (protocol == Protocol::Relative)
            u[e.child - 1] += gains.beta * e.weight * (nb.v - self.v);
    };
    for (const Edge& e : m.base.dag_edges) accumulate(e);
    for (const Edge& e : m.reverse_edges) accumulate(e);
    if (protocol == Protocol::Absolute)
        for (int i = 0; i < n; ++i) u[i] -= gains.beta * states[i].v;
    return u;
}

namespace {

double spread(const Vector& v) { return v.maxCoeff() - v.minCoeff(); }

// One classical RK4 step of x' = v, v' = -alpha*L*x - (beta*v | beta*L*v).
class Rk4Stepper {
public:
    Rk4Stepper(const Matrix& l, const GainPair& gains, Protocol protocol)
        : l_(l), gains_(gains), protocol_(protocol) {
        const auto n = l.rows();
        for (Vector* buf : {&kx1_, &kx2_, &kx3_, &kx4_, &kv1_, &kv2_, &kv3_, &kv4_, &xt_, &vt_})
            buf->resize(n);
    }

    void step(Vector& x, Vector& v, double dt) {
        deriv(x, v, kx1_, kv1_);
        xt_ = x + 0.5 * dt * kx1_;
        vt_ = v + 0.5 * dt * kv1_;
        deriv(xt_, vt_, kx2_, kv2_);
        xt_ = x + 0.5 * dt * kx2_;
        vt_ = v + 0.5 * dt * kv2_;
        deriv(xt_, vt_, kx3_, kv3_);
        xt_ = x + dt * kx3_;
        vt_ = v + dt * kv3_;
        deriv(xt_, vt_, kx4_, kv4_);
        x += dt / 6.0 * (kx1_ + 2.0 * kx2_ + 2.0 * kx3_ + kx4_);
        v += dt / 6.0 * (kv1_ + 2.0 * kv2_ + 2.0 * kv3_ + kv4_);
    }

private:
    void deriv(const Vector& x, const Vector& v, Vector& kx, Vector& kv) {
        kx = v;
        kv.noalias() = -gains_.alpha * (l_ * x);
        if (protocol_ == Protocol::Relative)
            kv.noalias() -= gains_.beta * (l_ * v);
        else
            kv -= gains_.beta * v;
    }

    const Matrix& l_;
    GainPair gains_;
    Protocol protocol_;
    Vector kx1_, kx2_, kx3_, kx4_, kv1_, kv2_, kv3_, kv4_, xt_, vt_;
};

}  // namespace

SimulationTrace simulate(const MixedGraph& m, const GainPair& gains, Protocol protocol,
                         const Vector& x0, const Vector& v0, const SimulationConfig& cfg) {
    const int n = m.n();
    if (x0.size() != n || v0.size() != n)
        throw Error(errc::dimension_mismatch, "initial state length must equal vertex count");
    if (!x0.allFinite() || !v0.allFinite())
        throw Error(errc::invalid_parameter, "initial states must be finite");
    if (!(cfg.dt > 0.0) || cfg.t_max < cfg.dt || !(cfg.conv_tol < cfg.div_tol) ||
        cfg.sample_stride < 1)
        throw Error(errc::invalid_parameter, "invalid simulation config");

    const Matrix l = laplacian(m).l_total;
    Rk4Stepper stepper(l, gains, protocol);
    const long long steps = std::llround(cfg.t_max / cfg.dt);

    SimulationTrace trace;
    Vector x = x0, v = v0;
    auto sample = [&](double t) {
        trace.times.push_back(t);
        trace.positions.push_back(x);
        trace.velocities.push_back(v);
        trace.pos_disagreement.push_back(spread(x));
        trace.vel_disagreement.push_back(spread(v));
    };

    sample(0.0);
    if (trace.pos_disagreement.back() < cfg.conv_tol &&
        trace.vel_disagreement.back() < cfg.conv_tol) {
        trace.verdict = TraceVerdict::Converged;
        trace.verdict_time = 0.0;
        return trace;
    }

    for (long long k = 1; k <= steps; ++k) {
        stepper.step(x, v, cfg.dt);
        const double t = k * cfg.dt;
        const bool finite = x.allFinite() && v.allFinite();
        const double pos_d = finite ? spread(x) : std::numeric_limits<double>::infinity();
        const double vel_d = finite ? spread(v) : std::numeric_limits<double>::infinity();

        TraceVerdict verdict = TraceVerdict::Undecided;
        bool overflow = false;
        if (pos_d > cfg.div_tol || vel_d > cfg.div_tol) {
            verdict = TraceVerdict::Diverged;
        } else if (!finite || x.cwiseAbs().maxCoeff() > SimulationConfig::overflow_guard ||
                   v.cwiseAbs().maxCoeff() > SimulationConfig::overflow_guard) {
            verdict = TraceVerdict::Diverged;
            overflow = true;
        } else if (pos_d < cfg.conv_tol && vel_d < cfg.conv_tol) {
            verdict = TraceVerdict::Converged;
        }

        if (verdict != TraceVerdict::Undecided || k % cfg.sample_stride == 0 || k == steps)
            sample(t);
        if (verdict != TraceVerdict::Undecided) {
            trace.verdict = verdict;
            trace.verdict_time = t;
            trace.overflow = overflow;
            return trace;
        }
    }
    trace.verdict = TraceVerdict::Undecided;
    trace.verdict_time = cfg.t_max;
    return trace;
}

Vector left_zero_eigenvector(const MixedGraph& m) {
    if (!has_spanning_tree(m))
        throw Error(errc::no_spanning_tree, "left null vector requires a simple zero eigenvalue");
    const Matrix lt = laplacian(m).l_total.transpose();
    Eigen::BDCSVD<Matrix> svd(lt, Eigen::ComputeThinV);
    Vector w = svd.matrixV().col(lt.cols() - 1);  // singular vector of the smallest sigma
    if (w.sum() < 0.0) w = -w;
    w = w.cwiseMax(0.0);  // shave roundoff-negative entries
    const double total = w.sum();
    if (!(total > 0.0))
        throw Error(errc::no_spanning_tree, "degenerate left null vector");
    return w / total;
}

Consistency classify_consistency(TraceVerdict trace, Verdict spectral) {
    if (trace == TraceVerdict::Undecided || spectral == Verdict::Boundary)
        return Consistency::Inconclusive;
    const bool conv = trace == TraceVerdict::Converged;
    const bool cons = spectral == Verdict::Consensus;
    return conv == cons ? Consistency::Agree : Consistency::Disagree;
}

}  // namespace hiercon
