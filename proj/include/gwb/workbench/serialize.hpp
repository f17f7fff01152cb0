#pragma once

#include "gwb/crumby.hpp"
#include "gwb/edge_color.hpp"
#include "gwb/list_pack.hpp"
#include "gwb/matching.hpp"
#include "gwb/order_types.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace gwb::workbench
{
    using Json = nlohmann::ordered_json;

    /// "u v color" triples, one per line, in entry order.
    auto format_edge_coloring(const EdgeColoring &col) -> std::string;
    /// Inverse of format_edge_coloring; the color count is the largest color seen
    /// unless colors is given.
    auto parse_edge_coloring(std::string_view text, int colors = -1) -> EdgeColoring;

    /// Sorted "u-v" pairs separated by spaces.
    auto format_matching(const Matching &m) -> std::string;
    auto parse_matching(std::string_view text) -> Matching;

    /// Space-separated vertex indices.
    auto format_ordering(const Ordering &o) -> std::string;
    auto parse_ordering(std::string_view text) -> Ordering;

    /// {"blue_hex": "0x..", "blue": [vertices]}
    auto bipartition_json(const Bipartition &p) -> Json;
    auto parse_bipartition(const Json &j) -> Bipartition;

    /// Per-vertex sorted color arrays.
    auto list_assignment_json(const ListAssignment &l) -> Json;
    auto parse_list_assignment(const Json &j) -> ListAssignment;
    /// "0,1;1,2;..." with ';' between vertices.
    auto parse_list_text(std::string_view text) -> ListAssignment;

    /// t rows of n colors.
    auto packing_json(const Packing &p) -> Json;
    auto parse_packing(const Json &j) -> Packing;
}
