#pragma once

#include "gwb/graph.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gwb::workbench
{
    class FilterError : public std::runtime_error
    {
    public:
        FilterError(const std::string &message, std::size_t position);

        auto position() const -> std::size_t { return position_; }

    private:
        std::size_t position_;
    };

    using GraphPredicate = std::function<bool(const Graph &)>;

    /// Compiles a conjunction of predicates joined by '&', each optionally
    /// negated with '!':
    ///
    ///   cubic  subcubic  regular(r)  max-degree(d)  bipartite  triangle-free
    ///   planar  connected  connected(k)  edge-connected(l)  non-complete
    ///   min-degree(expr)  order(n)
    ///
    /// min-degree takes an arithmetic expression in n (+ - * / parentheses,
    /// decimal literals, log2(...)) and holds when the minimum degree is at
    /// least the ceiling of its value. An empty expression accepts every graph.
    auto compile_filter(std::string_view expr) -> GraphPredicate;

    /// Evaluates an expression of the min-degree grammar at n.
    auto evaluate_in_n(std::string_view expr, int n) -> double;
}
