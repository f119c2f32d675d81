#include "hiercon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "hiercon/errors.hpp"
#include "hiercon/rng.hpp"

namespace hiercon {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.child) + "," + std::to_string(e.parent) + ")";
}

void check_common(const Edge& e, int n) {
    if (e.child < 1 || e.child > n || e.parent < 1 || e.parent > n)
        throw Error(errc::invalid_parameter, "vertex out of range in edge " + edge_str(e));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
        throw Error(errc::non_positive_weight, "edge " + edge_str(e) + " has weight " +
                                                   std::to_string(e.weight));
}

void check_weight_bounds(const WeightBounds& w) {
    if (!(w.low > 0.0) || !std::isfinite(w.high))
        throw Error(errc::non_positive_weight, "weight bounds must satisfy 0 < low <= high");
    if (w.low > w.high)
        throw Error(errc::invalid_parameter, "weight bounds must satisfy low <= high");
}

}  // namespace

HierarchicalGraph build_dag(int n, std::vector<Edge> edges) {
    if (n <= 2) throw Error(errc::too_few_vertices, "need n > 2, got " + std::to_string(n));
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        check_common(e, n);
        if (e.child <= e.parent)
            throw Error(errc::edge_order_violation,
                        "edge " + edge_str(e) + " violates the linear extension ordering");
        if (!seen.insert({e.child, e.parent}).second)
            throw Error(errc::duplicate_edge, "duplicate edge " + edge_str(e));
    }
    return HierarchicalGraph{n, std::move(edges)};
}

MixedGraph add_reverse_edges(HierarchicalGraph g, std::vector<Edge> reverse_edges) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : reverse_edges) {
        check_common(e, g.n);
        if (e.child >= e.parent)
            throw Error(errc::reverse_order_violation,
                        "reverse edge " + edge_str(e) + " must point from a higher-numbered "
                        "parent to a lower-numbered child");
        if (!seen.insert({e.child, e.parent}).second)
            throw Error(errc::duplicate_reverse_edge, "duplicate reverse edge " + edge_str(e));
    }
    return MixedGraph{std::move(g), std::move(reverse_edges)};
}

AssumptionParams assumption_params(const MixedGraph& m) {
    AssumptionParams p;
    std::vector<int> superior(m.n() + 1, 0);   // in-neighbors below the vertex
    std::vector<int> inferior(m.n() + 1, 0);   // in-neighbors above the vertex
    std::vector<double> dag_indeg(m.n() + 1, 0.0);
    for (const Edge& e : m.base.dag_edges) {
        ++superior[e.child];
        dag_indeg[e.child] += e.weight;
        p.a_bar = std::max(p.a_bar, e.weight);
    }
    for (const Edge& e : m.reverse_edges) {
        ++inferior[e.child];
        p.a_bar_r = std::max(p.a_bar_r, e.weight);
    }
    for (int i = 1; i <= m.n(); ++i) {
        p.zeta = std::max(p.zeta, superior[i]);
        p.xi = std::max(p.xi, inferior[i]);
        p.d_max = std::max(p.d_max, dag_indeg[i]);
    }
    return p;
}

bool has_spanning_tree(const MixedGraph& m) {
    const int n = m.n();
    std::vector<std::vector<int>> out(n + 1);  // information flow parent -> child
    std::vector<int> indeg(n + 1, 0);
    auto add = [&](const Edge& e) {
        out[e.parent].push_back(e.child);
        ++indeg[e.child];
    };
    for (const Edge& e : m.base.dag_edges) add(e);
    for (const Edge& e : m.reverse_edges) add(e);

    auto reaches_all = [&](int root) {
        std::vector<char> seen(n + 1, 0);
        std::deque<int> queue{root};
        seen[root] = 1;
        int count = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : out[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    queue.push_back(w);
                }
        }
        return count == n;
    };

    // A vertex nothing feeds must itself be the root; two such vertices can
    // never reach each other.
    std::vector<int> sources;
    for (int i = 1; i <= n; ++i)
        if (indeg[i] == 0) sources.push_back(i);
    if (sources.size() > 1) return false;
    if (sources.size() == 1) return reaches_all(sources.front());
    for (int i = 1; i <= n; ++i)
        if (reaches_all(i)) return true;
    return false;
}

HierarchicalGraph gen_path(int n, double w) {
    if (n <= 2) throw Error(errc::too_few_vertices, "need n > 2, got " + std::to_string(n));
    if (!(w > 0.0)) throw Error(errc::non_positive_weight, "path weight must be positive");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.push_back({i + 1, i, w});
    return HierarchicalGraph{n, std::move(edges)};
}

HierarchicalGraph gen_star(int n, double rho) {
    if (n <= 2) throw Error(errc::too_few_vertices, "need n > 2, got " + std::to_string(n));
    if (!(rho > 0.0)) throw Error(errc::non_positive_weight, "hub weight must be positive");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 2; i <= n; ++i) edges.push_back({i, 1, rho});
    return HierarchicalGraph{n, std::move(edges)};
}

namespace {

// Shared driver for the two random generators. zeta_cap/xi_cap < 0 disables
// the per-vertex limits; target_rev < 0 uses the cap-derived target.
MixedGraph random_mixed_impl(int n, double dag_density, int target_rev, int zeta_cap,
                             int xi_cap, WeightBounds weights, std::uint64_t seed) {
    if (n <= 2) throw Error(errc::too_few_vertices, "need n > 2, got " + std::to_string(n));
    if (!(dag_density > 0.0) || dag_density > 1.0)
        throw Error(errc::invalid_parameter, "dag_density must lie in (0, 1]");
    check_weight_bounds(weights);

    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> weight(weights.low, weights.high);
    std::bernoulli_distribution keep(dag_density);

    std::vector<Edge> dag;
    std::vector<int> dag_indeg(n + 1, 0);
    for (int i = 1; i < n; ++i) {  // spanning path anchor
        dag.push_back({i + 1, i, weight(rng)});
        ++dag_indeg[i + 1];
    }
    for (int child = 3; child <= n; ++child)
        for (int parent = 1; parent <= child - 2; ++parent) {
            if (zeta_cap >= 0 && dag_indeg[child] >= zeta_cap) break;
            if (keep(rng)) {
                dag.push_back({child, parent, weight(rng)});
                ++dag_indeg[child];
            }
        }

    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (target_rev > pairs)
        throw Error(errc::infeasible_reverse_count,
                    std::to_string(target_rev) + " reverse edges requested but only " +
                        std::to_string(pairs) + " pairs exist");

    std::vector<std::pair<int, int>> candidates;  // (child, parent), child < parent
    candidates.reserve(pairs);
    for (int child = 1; child < n; ++child)
        for (int parent = child + 1; parent <= n; ++parent)
            candidates.emplace_back(child, parent);
    std::shuffle(candidates.begin(), candidates.end(), rng);

    long long want = target_rev >= 0
                         ? target_rev
                         : std::min<long long>(static_cast<long long>(std::max(xi_cap, 0)) * n,
                                               pairs);
    std::vector<Edge> rev;
    std::vector<int> rev_indeg(n + 1, 0);
    for (const auto& [child, parent] : candidates) {
        if (static_cast<long long>(rev.size()) >= want) break;
        if (xi_cap >= 0 && rev_indeg[child] >= xi_cap) continue;
        rev.push_back({child, parent, weight(rng)});
        ++rev_indeg[child];
    }
    if (target_rev >= 0 && static_cast<long long>(rev.size()) < target_rev)
        throw Error(errc::infeasible_reverse_count,
                    "per-vertex caps admit only " + std::to_string(rev.size()) +
                        " of the requested reverse edges");

    return add_reverse_edges(build_dag(n, std::move(dag)), std::move(rev));
}

}  // namespace

MixedGraph gen_random_mixed(int n, double dag_density, int rev_count, WeightBounds weights,
                            std::uint64_t seed) {
    if (rev_count < 0) throw Error(errc::invalid_parameter, "rev_count must be >= 0");
    return random_mixed_impl(n, dag_density, rev_count, -1, -1, weights, seed);
}

MixedGraph gen_random_mixed_capped(int n, double dag_density, int zeta_cap, int xi_cap,
                                   WeightBounds weights, std::uint64_t seed) {
    if (zeta_cap < 1 || xi_cap < 0)
        throw Error(errc::invalid_parameter, "need zeta_cap >= 1 (path anchor) and xi_cap >= 0");
    return random_mixed_impl(n, dag_density, -1, zeta_cap, xi_cap, weights, seed);
}

MixedGraph gen_random_star_mixed(int n, double rho, WeightBounds reverse_weights,
                                 std::uint64_t seed, int max_reverse) {
    HierarchicalGraph star = gen_star(n, rho);
    check_weight_bounds(reverse_weights);

    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> weight(reverse_weights.low, reverse_weights.high);

    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    long long cap = max_reverse < 0 ? pairs : std::min<long long>(max_reverse, pairs);
    std::uniform_int_distribution<long long> count_dist(0, cap);
    long long count = count_dist(rng);

    std::vector<std::pair<int, int>> candidates;
    candidates.reserve(pairs);
    for (int child = 1; child < n; ++child)
        for (int parent = child + 1; parent <= n; ++parent)
            candidates.emplace_back(child, parent);
    std::shuffle(candidates.begin(), candidates.end(), rng);

    std::vector<Edge> rev;
    rev.reserve(count);
    for (long long k = 0; k < count; ++k)
        rev.push_back({candidates[k].first, candidates[k].second, weight(rng)});
    return add_reverse_edges(std::move(star), std::move(rev));
}

}  // namespace hiercon
