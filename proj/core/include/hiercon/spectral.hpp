#pragma once

#include <complex>
#include <vector>

#include "hiercon/graph.hpp"
#include "hiercon/laplacian.hpp"

namespace hiercon {

using Complex = std::complex<double>;
using Spectrum = std::vector<Complex>;

inline constexpr double kZeroTol = 1e-8;    // identifies the structural zero eigenvalue
inline constexpr double kMarginTol = 1e-9;  // verdict band around criterion equality

/// Control gains shared by all agents and held fixed across a graph family.
struct GainPair {
    double alpha = 1.0;  // state gain
    double beta = 1.0;   // velocity gain

    double ratio() const { return beta * beta / alpha; }
};

enum class Protocol { Absolute, Relative };

enum class Verdict { Consensus, NoConsensus, Boundary };

struct VerdictResult {
    Verdict verdict = Verdict::Boundary;
    double margin = 0.0;  // gain ratio minus criterion
};

/// Everything the consensus criteria need from one graph instance.
struct SpectralReport {
    Spectrum spectrum;
    double abs_criterion = 0.0;   // max Im^2/Re over nonzero eigenvalues
    double rel_criterion = 0.0;   // max Im^2/(Re*|l|^2) over nonzero eigenvalues
    double gershgorin_bound = 0.0;
    bool spanning_tree = false;
};

/// All eigenvalues of a dense real matrix, conjugate pairs included.
/// Throws errc::convergence_failure if the QR iteration fails.
Spectrum eigenvalues(const Matrix& m);

/// max Im^2(l)/Re(l) over eigenvalues with |l| > zero_tol; 0 when all such
/// eigenvalues are real. Throws errc::all_eigenvalues_zero when no
/// eigenvalue clears the tolerance.
double abs_criterion(const Spectrum& spectrum, double zero_tol = kZeroTol);

/// Same with the |l|^2 factor in the denominator.
double rel_criterion(const Spectrum& spectrum, double zero_tol = kZeroTol);

/// Family-wide gain rule 2(zeta*a_bar + xi*a_bar_r): any gains with a larger
/// ratio keep the absolute-protocol criterion satisfied on every graph the
/// params bound.
double gershgorin_bound(const AssumptionParams& p);

/// Spectrum of the unit-weight directed ring on s+1 vertices:
/// {0} plus 1 - cos(2*pi*i/(s+1)) + j*sin(2*pi*i/(s+1)) for i = 1..s.
Spectrum ring_spectrum_closed_form(int s);

/// Relative criterion of the path family with a full-span reverse edge:
/// cot^2(pi/(s+1))/2, strictly increasing and unbounded in s.
double path_family_rel_criterion(int s);

/// Spectrum of a star DAG (hub weight rho) with arbitrary reverse edges:
/// {0} plus rho + p_ii for i = 1..n-1, where p_ii is vertex i's total
/// received reverse-edge weight. Throws errc::not_a_star if the DAG part is
/// not a uniform star.
Spectrum star_spectrum_closed_form(const MixedGraph& m);

/// Builds the full report for one mixed graph. Criteria fall back to 0 when
/// the spectrum has no nonzero eigenvalue (edgeless graph); such graphs have
/// no spanning tree, so the verdict is unaffected.
SpectralReport make_spectral_report(const MixedGraph& m, double zero_tol = kZeroTol);

/// Strict-inequality criterion check with a Boundary band: Consensus needs a
/// spanning tree and margin > margin_tol, NoConsensus covers margin <
/// -margin_tol or a missing spanning tree, anything else is Boundary.
VerdictResult consensus_verdict(const SpectralReport& report, const GainPair& gains,
                                Protocol protocol, double margin_tol = kMarginTol);

}  // namespace hiercon
