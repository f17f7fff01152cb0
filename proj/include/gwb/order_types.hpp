#pragma once

#include "gwb/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gwb
{
    /// ordering[i] is the vertex placed at position i.
    using Ordering = std::vector<int>;

    /// Type A: every vertex has an odd number of earlier neighbours, or none.
    /// Type B: as A, or an even number of earlier neighbours and no later ones.
    enum class OrderType
    {
        A,
        B
    };

    struct OrderCheck
    {
        bool ok = true;
        /// 1-based position of the first violating vertex.
        std::optional<int> violation_position;
        int back_degree = 0;
        int forward_degree = 0;
    };

    /// Work counter for the linear-time check: one step per vertex and per
    /// adjacency visit.
    struct OrderStats
    {
        std::uint64_t steps = 0;
    };

    /// Throws InputError unless ordering is a permutation of the vertices.
    auto verify_order(const Graph &g, const Ordering &ordering, OrderType type, OrderStats *stats = nullptr) -> OrderCheck;

    inline constexpr int order_search_max_order = 24;

    /// Exact search over placed-vertex sets: whether v may come next depends only
    /// on the set already placed. Returns the lexicographically least valid
    /// ordering, or nullopt when none exists. Refuses graphs above 24 vertices.
    auto find_order(const Graph &g, OrderType type) -> std::optional<Ordering>;

    auto to_string(OrderType type) -> char;
}
