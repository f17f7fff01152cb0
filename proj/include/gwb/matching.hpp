#pragma once

#include "gwb/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwb
{
    /// Disjoint edges, each stored with u < v, sorted.
    using Matching = std::vector<Edge>;

    struct MatchingEnumeration
    {
        std::vector<Matching> matchings;
        /// Set when enumeration stopped at the cap; the list is then a prefix.
        bool truncated = false;
    };

    inline constexpr std::uint64_t default_matching_cap = 1'000'000;

    /// All perfect matchings in lexicographic order (lowest unmatched vertex
    /// paired with its neighbours in increasing index), up to cap.
    auto perfect_matchings(const Graph &g, std::uint64_t cap = default_matching_cap) -> MatchingEnumeration;

    /// Visits perfect matchings in the same order; the visitor returns false to stop.
    /// Returns true iff the enumeration ran to completion.
    auto for_each_perfect_matching(const Graph &g, const std::function<bool(const Matching &)> &visit) -> bool;

    /// Counts perfect matchings, stopping at cap; second is the truncation flag.
    auto count_perfect_matchings(const Graph &g, std::uint64_t cap = default_matching_cap) -> std::pair<std::uint64_t, bool>;

    /// Some perfect matching of g avoiding every edge in banned, if one exists.
    auto find_perfect_matching_avoiding(const Graph &g, const Matching &banned) -> std::optional<Matching>;

    auto is_perfect_matching(const Graph &g, const Matching &m) -> bool;
    auto edge_disjoint(const Matching &a, const Matching &b) -> bool;

    struct PoorMatchabilityVerdict
    {
        /// Vacuously true when fewer than two perfect matchings exist.
        bool poorly_matchable = true;
        std::uint64_t pm_count = 0;
        bool count_truncated = false;
        /// Edge-disjoint pair of perfect matchings when not poorly matchable.
        std::optional<std::pair<Matching, Matching>> witness;
    };

    auto is_poorly_matchable(const Graph &g, std::uint64_t count_cap = default_matching_cap) -> PoorMatchabilityVerdict;

    struct DisjointPairVerdict
    {
        bool has_pair = false;
        std::uint64_t pm_count = 0;
        bool count_truncated = false;
        std::optional<std::pair<Matching, Matching>> witness;
    };

    auto has_two_disjoint_pms(const Graph &g, std::uint64_t count_cap = default_matching_cap) -> DisjointPairVerdict;

    struct OddCutWitness
    {
        VertexMask set = 0;
        int cut_size = 0;
    };

    struct RGraphVerdict
    {
        bool is_r_graph = false;
        /// Empty when true; otherwise "not r-regular" or "odd cut below r".
        std::string reason;
        std::optional<OddCutWitness> witness;
    };

    inline constexpr int r_graph_max_order = 24;

    /// Exhaustive Gray-code sweep over vertex subsets with incremental cut
    /// sizes. Throws SizeLimitError above r_graph_max_order vertices.
    auto is_r_graph(const Graph &g, int r) -> RGraphVerdict;

    /// Edges between the vertex set and its complement.
    auto cut_size(const Graph &g, VertexMask set) -> int;
}
