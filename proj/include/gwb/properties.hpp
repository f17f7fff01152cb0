#pragma once

#include "gwb/graph.hpp"

#include <optional>
#include <vector>

namespace gwb
{
    struct PropertyRecord
    {
        int n = 0;
        int m = 0;
        int min_degree = 0;
        int max_degree = 0;
        bool is_regular = true;
        /// Common degree when regular, otherwise -1.
        int regularity = -1;
        bool is_bipartite = true;
        bool is_triangle_free = true;
        bool is_connected = true;
        /// nullopt encodes an infinite diameter (disconnected graph).
        std::optional<int> diameter;
    };

    auto properties(const Graph &g) -> PropertyRecord;

    auto is_connected(const Graph &g) -> bool;
    auto is_bipartite(const Graph &g) -> bool;
    auto is_triangle_free(const Graph &g) -> bool;

    /// BFS distances from source; -1 for unreachable vertices.
    auto bfs_distances(const Graph &g, int source) -> std::vector<int>;

    /// nullopt when disconnected. Graphs on 0 or 1 vertices have diameter 0.
    auto diameter(const Graph &g) -> std::optional<int>;

    /// Least d such that every subgraph has a vertex of degree at most d.
    auto degeneracy(const Graph &g) -> int;

    struct ConnectivityRecord
    {
        int kappa = 0;
        int lambda = 0;
    };

    /// Exact vertex and edge connectivity. Disconnected graphs and K1 give
    /// (0, 0); K_n gives (n-1, n-1).
    auto connectivity(const Graph &g) -> ConnectivityRecord;

    auto edge_connectivity(const Graph &g) -> int;
    auto vertex_connectivity(const Graph &g) -> int;

    /// Exact planarity test (Boyer-Myrvold edge addition).
    auto is_planar(const Graph &g) -> bool;
}
