#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hiercon/graph.hpp"
#include "hiercon/laplacian.hpp"
#include "hiercon/spectral.hpp"

namespace hiercon::testing {

/// Largest pairwise distance after sorting both multisets lexicographically
/// by (re, im). Infinity on size mismatch.
inline double max_multiset_distance(Spectrum a, Spectrum b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    auto lex = [](const Complex& l, const Complex& r) {
        return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    };
    std::sort(a.begin(), a.end(), lex);
    std::sort(b.begin(), b.end(), lex);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

/// Directed path 1..n with a single full-span reverse edge: a directed ring.
inline MixedGraph ring_mixed(int n, double w = 1.0) {
    return add_reverse_edges(gen_path(n, w), {{1, n, w}});
}

/// Signed distance of z to the union of row Gershgorin discs of l (centers
/// and radii both equal to the diagonal). <= 0 means contained.
inline double gershgorin_excess(const Matrix& l, const Complex& z) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
        const double c = l(i, i);
        best = std::min(best, std::abs(z - Complex(c, 0.0)) - c);
    }
    return best;
}

inline Vector random_vector(int n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
}

}  // namespace hiercon::testing
