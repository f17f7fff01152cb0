#pragma once

#include "gwb/edge_color.hpp"
#include "gwb/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwb
{
    /// Colors 1..colors on every edge; adjacent edges may share a color.
    using EdgeColorAssignment = EdgeColoring;

    struct RainbowCheck
    {
        bool rainbow_connected = false;
        /// Set when the graph is disconnected; rainbow_connected is then false.
        bool disconnected = false;
        /// A vertex pair without a rainbow path, when not rainbow connected.
        std::optional<std::pair<int, int>> failing_pair;
    };

    /// Per-pair rainbow path existence by search over (vertex, used-color set)
    /// states. Throws InputError for uncolored edges, duplicate entries,
    /// non-edges or colors outside 1..colors.
    auto is_rainbow_connected(const Graph &g, const EdgeColorAssignment &col) -> RainbowCheck;

    struct RcVerdict
    {
        enum class Status
        {
            exact,
            disconnected,
            cap_exceeded
        };

        Status status = Status::exact;
        /// Exact value, or cap + 1 as a lower bound when the cap was exceeded.
        int rc = 0;
        EdgeColorAssignment certificate;
    };

    /// Exact rainbow connection number, searching k = max(1, diameter) upwards.
    /// A negative cap means n - 1, which always suffices.
    auto rainbow_connection_number(const Graph &g, int cap = -1) -> RcVerdict;

    /// An assignment with exactly k colors making g rainbow connected, or nullopt
    /// after exhaustive search (colors opened in first-use order).
    auto find_rainbow_coloring(const Graph &g, int k) -> std::optional<EdgeColorAssignment>;

    /// Threshold offset c of the minimum-degree hypothesis delta >= n/2 + c, as num/den.
    struct Rational
    {
        long num = 0;
        long den = 1;
    };

    /// Parses "p", "p/q" or a terminating decimal like "0.5" / "-1.25".
    auto parse_rational(const std::string &text) -> Rational;

    /// delta(g) >= n/2 + c, evaluated exactly.
    auto meets_min_degree(const Graph &g, const Rational &offset) -> bool;

    struct MindegRow
    {
        std::size_t index = 0;
        Graph graph;
        RcVerdict verdict;
    };

    struct MindegReport
    {
        std::vector<MindegRow> rows;
        std::size_t complete_skipped = 0;
        std::size_t disconnected_skipped = 0;
        std::size_t below_threshold = 0;
        /// Indices of qualifying graphs with rc > 2.
        std::vector<std::size_t> findings;
    };

    /// rc of every connected non-complete graph with delta >= n/2 + offset.
    auto mindeg_scan(const std::vector<Graph> &corpus, const Rational &offset, int jobs = 1) -> MindegReport;
}
