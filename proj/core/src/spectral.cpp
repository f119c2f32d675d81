#include "hiercon/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hiercon/errors.hpp"

namespace hiercon {

Spectrum eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error(errc::invalid_parameter, "matrix must be square");
    if (!m.allFinite())
        throw Error(errc::invalid_parameter, "matrix entries must be finite");
    Eigen::EigenSolver<Matrix> solver;
    solver.setMaxIterations(100 * std::max<Eigen::Index>(m.rows(), 1));
    solver.compute(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error(errc::convergence_failure, "QR iteration did not converge");
    const auto& vals = solver.eigenvalues();
    return Spectrum(vals.data(), vals.data() + vals.size());
}

namespace {

template <typename Fn>
double max_over_nonzero(const Spectrum& spectrum, double zero_tol, Fn value) {
    bool any = false;
    double best = 0.0;
    for (const Complex& ev : spectrum) {
        if (std::abs(ev) <= zero_tol) continue;
        best = any ? std::max(best, value(ev)) : value(ev);
        any = true;
    }
    if (!any)
        throw Error(errc::all_eigenvalues_zero,
                    "no eigenvalue above zero_tol = " + std::to_string(zero_tol));
    return best;
}

}  // namespace

double abs_criterion(const Spectrum& spectrum, double zero_tol) {
    return max_over_nonzero(spectrum, zero_tol, [](const Complex& ev) {
        return ev.imag() * ev.imag() / ev.real();
    });
}

double rel_criterion(const Spectrum& spectrum, double zero_tol) {
    return max_over_nonzero(spectrum, zero_tol, [](const Complex& ev) {
        return ev.imag() * ev.imag() / (ev.real() * std::norm(ev));
    });
}

double gershgorin_bound(const AssumptionParams& p) {
    return 2.0 * (p.zeta * p.a_bar + p.xi * p.a_bar_r);
}

Spectrum ring_spectrum_closed_form(int s) {
    if (s < 1) throw Error(errc::invalid_parameter, "ring span must be >= 1");
    Spectrum spectrum;
    spectrum.reserve(s + 1);
    spectrum.emplace_back(0.0, 0.0);
    for (int i = 1; i <= s; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / (s + 1);
        spectrum.emplace_back(1.0 - std::cos(angle), std::sin(angle));
    }
    return spectrum;
}

double path_family_rel_criterion(int s) {
    if (s < 1) throw Error(errc::invalid_parameter, "span must be >= 1");
    const double cot = 1.0 / std::tan(std::numbers::pi / (s + 1));
    return 0.5 * cot * cot;
}

Spectrum star_spectrum_closed_form(const MixedGraph& m) {
    const int n = m.n();
    const auto& dag = m.base.dag_edges;
    if (static_cast<int>(dag.size()) != n - 1)
        throw Error(errc::not_a_star, "star DAG needs exactly n-1 hub edges");
    std::vector<char> covered(n + 1, 0);
    const double rho = dag.empty() ? 0.0 : dag.front().weight;
    for (const Edge& e : dag) {
        if (e.parent != 1 || e.child < 2 || covered[e.child] || e.weight != rho)
            throw Error(errc::not_a_star, "DAG part is not a uniform star on hub 1");
        covered[e.child] = 1;
    }

    std::vector<double> received(n + 1, 0.0);
    for (const Edge& e : m.reverse_edges) received[e.child] += e.weight;

    Spectrum spectrum;
    spectrum.reserve(n);
    spectrum.emplace_back(0.0, 0.0);
    for (int i = 1; i < n; ++i) spectrum.emplace_back(rho + received[i], 0.0);
    return spectrum;
}

SpectralReport make_spectral_report(const MixedGraph& m, double zero_tol) {
    SpectralReport report;
    report.spectrum = eigenvalues(laplacian(m).l_total);
    report.spanning_tree = has_spanning_tree(m);
    report.gershgorin_bound = gershgorin_bound(assumption_params(m));
    try {
        report.abs_criterion = abs_criterion(report.spectrum, zero_tol);
        report.rel_criterion = rel_criterion(report.spectrum, zero_tol);
    } catch (const Error& e) {
        if (e.code() != errc::all_eigenvalues_zero) throw;
        // all-zero spectrum: edgeless graph, criteria vacuous and no
        // spanning tree anyway
    }
    return report;
}

VerdictResult consensus_verdict(const SpectralReport& report, const GainPair& gains,
                                Protocol protocol, double margin_tol) {
    if (!(gains.alpha > 0.0) || !(gains.beta > 0.0))
        throw Error(errc::invalid_parameter, "control gains must be positive");
    const double criterion =
        protocol == Protocol::Absolute ? report.abs_criterion : report.rel_criterion;
    const double margin = gains.ratio() - criterion;
    if (!report.spanning_tree || margin < -margin_tol) return {Verdict::NoConsensus, margin};
    if (margin > margin_tol) return {Verdict::Consensus, margin};
    return {Verdict::Boundary, margin};
}

}  // namespace hiercon
