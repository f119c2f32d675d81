#pragma once

#include <cstdint>
#include <vector>

namespace hiercon {

/// Directed edge (child, parent, weight): the child receives information
/// from the parent. Vertex indices are one-based.
struct Edge {
    int child = 0;
    int parent = 0;
    double weight = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A weighted DAG whose stored numbering is a linear extension ordering:
/// every edge satisfies child > parent, so the adjacency matrix is strictly
/// lower triangular. Construct through build_dag or a generator; the
/// builders validate, the aggregate itself does not.
struct HierarchicalGraph {
    int n = 0;
    std::vector<Edge> dag_edges;

    friend bool operator==(const HierarchicalGraph&, const HierarchicalGraph&) = default;
};

/// A hierarchical graph plus reverse edges (child < parent), i.e. feedback
/// links that run against the linear extension ordering.
struct MixedGraph {
    HierarchicalGraph base;
    std::vector<Edge> reverse_edges;

    int n() const { return base.n; }

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;
};

/// Tightest neighbor-count and weight bounds satisfied by a concrete mixed
/// graph: zeta/xi bound the superior/inferior in-neighborhood sizes, a_bar
/// and a_bar_r the DAG and reverse edge weights, d_max the weighted DAG
/// in-degree.
struct AssumptionParams {
    int zeta = 0;
    int xi = 0;
    double a_bar = 0.0;
    double a_bar_r = 0.0;
    double d_max = 0.0;
};

struct WeightBounds {
    double low = 0.0;
    double high = 0.0;
};

/// Validates and assembles a hierarchical graph. Edges must already respect
/// the linear extension ordering (child > parent); the builder rejects
/// violations rather than re-sorting.
HierarchicalGraph build_dag(int n, std::vector<Edge> edges);

/// Attaches reverse edges (child < parent) to a validated DAG.
MixedGraph add_reverse_edges(HierarchicalGraph g, std::vector<Edge> reverse_edges);

/// Exact maxima over the instance: the tightest bounds this graph satisfies.
AssumptionParams assumption_params(const MixedGraph& m);

/// True iff some root reaches every vertex along information flow
/// (parent -> child).
bool has_spanning_tree(const MixedGraph& m);

/// Directed path 1 -> 2 -> ... -> n with uniform edge weight w.
HierarchicalGraph gen_path(int n, double w);

/// Directed star: hub 1 feeds every fringe vertex 2..n with weight rho.
HierarchicalGraph gen_star(int n, double rho);

/// Seeded random mixed graph. The DAG part always contains the path edges
/// (i+1, i), so a spanning tree is guaranteed; extra DAG edges are sampled
/// with the given density and rev_count distinct reverse pairs are drawn
/// uniformly. Deterministic for a fixed seed.
MixedGraph gen_random_mixed(int n, double dag_density, int rev_count,
                            WeightBounds weights, std::uint64_t seed);

/// Variant with per-vertex neighbor caps: no vertex ends up with more than
/// zeta_cap DAG in-edges or xi_cap reverse in-edges, so assumption_params
/// of the result is bounded by the caps uniformly across a family.
MixedGraph gen_random_mixed_capped(int n, double dag_density, int zeta_cap, int xi_cap,
                                   WeightBounds weights, std::uint64_t seed);

/// Star DAG with hub weight rho plus a random reverse-edge set. max_reverse
/// < 0 allows up to all n(n-1)/2 pairs; the drawn count is uniform in
/// [0, cap].
MixedGraph gen_random_star_mixed(int n, double rho, WeightBounds reverse_weights,
                                 std::uint64_t seed, int max_reverse = -1);

}  // namespace hiercon
