#pragma once

// Deliberately plain reference implementations for cross-checking the
// solvers. Exponential everywhere; keep inputs tiny.

#include "gwb/graph.hpp"

#include <optional>
#include <set>
#include <vector>

namespace gwb::test
{
    auto naive_connected(const Graph &g) -> bool;

    /// Least k admitting a proper vertex coloring.
    auto naive_chromatic_number(const Graph &g) -> int;

    /// Plain edge-by-edge backtracking with no ordering heuristics.
    auto naive_edge_colorable(const Graph &g, int k) -> bool;
    auto naive_chromatic_index(const Graph &g) -> int;

    /// Perfect matchings as sets of edges, from all n/2-subsets of edges.
    auto naive_perfect_matchings(const Graph &g) -> std::set<std::vector<Edge>>;

    /// min over odd sets S of edges leaving S, compared with r, plus r-regularity.
    auto naive_is_r_graph(const Graph &g, int r) -> bool;

    /// Minimum cut over all vertex bipartitions; 0 for fewer than 2 vertices.
    auto naive_edge_connectivity(const Graph &g) -> int;

    /// Smallest separating vertex set, n - 1 for complete graphs.
    auto naive_vertex_connectivity(const Graph &g) -> int;

    /// Some blue set B with max degree in G[B] <= max_blue, min degree in G[R] >= min_red
    /// (when R is non-empty) and no path with path_edges edges inside R.
    auto naive_crumby_exists(const Graph &g, int max_blue, int min_red, int path_edges) -> bool;

    /// Rainbow paths by enumerating every simple path. colors[i] is the color of edge i
    /// in g.edges() order.
    auto naive_rainbow_connected(const Graph &g, const std::vector<int> &colors) -> bool;

    /// Tries every assignment of 1..k to the edges, k = 1, 2, ...
    auto naive_rainbow_connection(const Graph &g) -> int;

    /// Every permutation; type_b allows even back-degree when nothing follows.
    auto naive_order_exists(const Graph &g, bool type_b) -> bool;

    /// lists[v] as explicit color vectors.
    using Lists = std::vector<std::vector<int>>;

    /// t pairwise-disjoint proper colorings chosen from all proper L-colorings.
    auto naive_packable(const Graph &g, const Lists &lists, int t) -> bool;

    /// Every k-list-assignment (up to renaming colors, by restricted-growth
    /// strings over the n*k list slots) admits t disjoint colorings. Returns
    /// a failing assignment if one exists.
    auto naive_failing_assignment(const Graph &g, int k, int t) -> std::optional<Lists>;

    auto naive_choosability(const Graph &g) -> int;
    auto naive_list_packing_number(const Graph &g) -> int;
}
