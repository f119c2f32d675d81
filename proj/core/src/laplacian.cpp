#include "hiercon/laplacian.hpp"

#include <algorithm>

namespace hiercon {

LaplacianDecomposition laplacian(const MixedGraph& m) {
    const int n = m.n();
    LaplacianDecomposition d;
    d.l_dag = Matrix::Zero(n, n);
    d.p = Matrix::Zero(n, n);

    for (const Edge& e : m.base.dag_edges) {
        const int i = e.child - 1, j = e.parent - 1;
        d.l_dag(i, j) -= e.weight;
        d.l_dag(i, i) += e.weight;
    }
    for (const Edge& e : m.reverse_edges) {
        const int i = e.child - 1, j = e.parent - 1;
        d.p(i, j) -= e.weight;
        d.p(i, i) += e.weight;
    }
    d.l_total = d.l_dag + d.p;

    if (!m.reverse_edges.empty()) {
        ReverseSpan span{m.n(), 1, 0};
        for (const Edge& e : m.reverse_edges) {
            span.theta = std::min(span.theta, e.child);
            span.phi = std::max(span.phi, e.parent);
        }
        span.s = span.phi - span.theta;
        d.span = span;
    }
    return d;
}

}  // namespace hiercon
