#pragma once

#include <Eigen/Dense>
#include <optional>

#include "hiercon/graph.hpp"

namespace hiercon {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Extremal vertices touched by reverse edges: theta is the lowest child,
/// phi the highest parent, s = phi - theta the reverse span.
struct ReverseSpan {
    int theta = 0;
    int phi = 0;
    int s = 0;
};

/// L_total = L_dag + P, where L_dag is the (lower-triangular) Laplacian of
/// the DAG part and P holds the reverse-edge rows. Both addends and the sum
/// have zero row sums. span is absent when the graph has no reverse edges.
struct LaplacianDecomposition {
    Matrix l_total;
    Matrix l_dag;
    Matrix p;
    std::optional<ReverseSpan> span;
};

LaplacianDecomposition laplacian(const MixedGraph& m);

}  // namespace hiercon
