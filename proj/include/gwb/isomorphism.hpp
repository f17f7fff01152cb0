#pragma once

#include "gwb/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gwb
{
    struct IsomorphismResult
    {
        bool isomorphic = false;
        /// witness[v] is the image in h of vertex v of g.
        std::vector<int> witness;
    };

    /// Backtracking search with degree and neighbour-degree multiset pruning.
    /// Intended for graphs of at most a few dozen vertices.
    auto are_isomorphic(const Graph &g, const Graph &h) -> IsomorphismResult;

    /// True iff perm is a bijection mapping the edge set of g exactly onto that of h.
    auto verify_isomorphism(const Graph &g, const Graph &h, std::span<const int> perm) -> bool;
}
