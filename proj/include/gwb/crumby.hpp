#pragma once

#include "gwb/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwb
{
    struct Bipartition
    {
        VertexMask blue = 0;

        auto red(const Graph &g) const -> VertexMask { return g.vertices() & ~blue; }
    };

    /// Conditions on the blue/red split. The classic crumby coloring is the default:
    /// blue induces max degree <= 1, red induces min degree >= 1, and red contains
    /// no path with 3 edges (as a subgraph, not necessarily induced).
    struct CrumbyParams
    {
        int max_blue_degree = 1;
        int min_red_degree = 1;
        int forbidden_red_path_edges = 3;

        auto operator<=>(const CrumbyParams &) const = default;

        /// Every partition valid under *this is valid under other.
        auto no_weaker_than(const CrumbyParams &other) const -> bool
        {
            return max_blue_degree <= other.max_blue_degree && min_red_degree >= other.min_red_degree
                && forbidden_red_path_edges <= other.forbidden_red_path_edges;
        }
    };

    enum class CrumbyClause
    {
        none,
        blue_degree,
        red_degree,
        red_path
    };

    auto to_string(CrumbyClause c) -> std::string;

    struct CrumbyCheck
    {
        bool ok = true;
        CrumbyClause violated = CrumbyClause::none;
        /// Offending vertex for degree clauses, path vertices for the path clause.
        std::vector<int> witness;
    };

    auto check_crumby(const Graph &g, const Bipartition &p, const CrumbyParams &params) -> CrumbyCheck;

    /// Some path with exactly `edges` edges inside the subgraph induced by mask,
    /// as a vertex sequence; empty when none exists.
    auto find_path_in(const Graph &g, VertexMask mask, int edges) -> std::vector<int>;

    enum class CrumbyStrategy
    {
        automatic,   // enumeration up to 20 vertices, backtracking above
        enumerate,
        backtrack
    };

    inline constexpr int crumby_enumeration_limit = 20;

    /// First valid partition in the strategy's deterministic order, or nullopt
    /// after exhausting the search space.
    auto find_crumby(const Graph &g, const CrumbyParams &params, CrumbyStrategy strategy = CrumbyStrategy::automatic)
        -> std::optional<Bipartition>;

    struct RelaxationPoint
    {
        CrumbyParams params;
        bool exists = false;
        std::optional<Bipartition> witness;
        /// Index of the stronger lattice point whose witness was reused, if any.
        std::optional<std::size_t> inherited_from;
    };

    /// Existence verdict per lattice point, in input order. A point inherits the
    /// witness of any stronger point that already has one.
    auto relaxation_scan(const Graph &g, const std::vector<CrumbyParams> &lattice) -> std::vector<RelaxationPoint>;
}
