#pragma once

#include "gwb/graph.hpp"

#include <optional>
#include <vector>

namespace gwb
{
    struct ColoredEdge
    {
        int u = 0;
        int v = 0;
        int color = 0;

        auto operator<=>(const ColoredEdge &) const = default;
    };

    /// Colors are 1..colors; entries are listed in edge order (u < v, lexicographic).
    struct EdgeColoring
    {
        int colors = 0;
        std::vector<ColoredEdge> entries;
    };

    struct ClassVerdict
    {
        int chromatic_index = 0;
        int class_label = 1;
        EdgeColoring certificate;
    };

    /// Proper edge coloring with at most k colors, or nullopt once the search
    /// is exhausted. Branches on the edge with fewest feasible colors and only
    /// ever opens the lowest unused color.
    auto find_edge_coloring(const Graph &g, int k) -> std::optional<EdgeColoring>;

    /// Exact chromatic index. Edgeless graphs are Class 1 with index 0.
    auto chromatic_index(const Graph &g) -> ClassVerdict;

    /// m > max_degree * floor(n / 2)
    auto is_overfull(const Graph &g) -> bool;

    /// Every edge of g colored exactly once from 1..colors, adjacent edges distinct,
    /// and no entry names a non-edge.
    auto verify_edge_coloring(const Graph &g, const EdgeColoring &col) -> bool;
}
