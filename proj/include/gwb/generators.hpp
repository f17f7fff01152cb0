#pragma once

#include "gwb/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gwb
{
    /// Named families. Parameters per family:
    ///   empty(n) complete(n) cycle(n) path(n) star(n) complete_bipartite(a, b)
    ///   prism(k) petersen() circulant(n, d1, d2, ...)
    /// prism(k) is C_k x K2 with outer cycle 0..k-1 and rungs i -- k+i.
    /// petersen: outer cycle 0..4, spokes i -- i+5, inner pentagram i+5 -- (i+2 mod 5)+5.
    auto generate(std::string_view family, const std::vector<int> &params) -> Graph;

    auto family_names() -> std::vector<std::string>;

    auto complete_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;
    auto prism_graph(int k) -> Graph;
    auto petersen_graph() -> Graph;

    /// Vertex i adjacent to i +- d (mod n) for each d in distances, 1 <= d <= n/2.
    auto circulant_graph(int n, const std::vector<int> &distances) -> Graph;

    /// Replaces edge uv by the path u - w - v with the new vertex w = n.
    auto subdivide_edge(const Graph &g, int u, int v) -> Graph;
}
