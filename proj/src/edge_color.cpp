#include "gwb/edge_color.hpp"

#include <stdexcept>

namespace gwb
{
    namespace
    {
        using ColorMask = std::uint64_t;

        class EdgeColorSearch
        {
        public:
            EdgeColorSearch(const Graph &g, int k) :
                k_(k), edges_(g.edges()), color_(edges_.size(), 0), used_(g.order(), 0)
            {
            }

            auto run() -> std::optional<EdgeColoring>
            {
                if (! extend(edges_.size(), 0))
                    return std::nullopt;
                EdgeColoring result{k_, {}};
                for (std::size_t i = 0; i < edges_.size(); ++i)
                    result.entries.push_back({edges_[i].u, edges_[i].v, color_[i]});
                return result;
            }

        private:
            auto palette() const -> ColorMask { return ((ColorMask{1} << k_) - 1) << 1; }

            auto feasible(std::size_t e) const -> ColorMask
            {
                return palette() & ~(used_[edges_[e].u] | used_[edges_[e].v]);
            }

            auto extend(std::size_t remaining, int highest) -> bool
            {
                if (remaining == 0)
                    return true;

                std::size_t pick = edges_.size();
                int pick_count = k_ + 1;
                for (std::size_t e = 0; e < edges_.size(); ++e) {
                    if (color_[e])
                        continue;
                    int c = std::popcount(feasible(e));
                    if (c == 0)
                        return false;
                    if (c < pick_count) {
                        pick = e;
                        pick_count = c;
                    }
                }

                // colors above highest are interchangeable: try only the first of them
                ColorMask options = feasible(pick) & ((ColorMask{1} << (highest + 2)) - 1);
                auto [u, v] = edges_[pick];
                while (options) {
                    int c = std::countr_zero(options);
                    options &= options - 1;
                    color_[pick] = c;
                    used_[u] |= ColorMask{1} << c;
                    used_[v] |= ColorMask{1} << c;
                    if (extend(remaining - 1, std::max(highest, c)))
                        return true;
                    used_[u] &= ~(ColorMask{1} << c);
                    used_[v] &= ~(ColorMask{1} << c);
                }
                color_[pick] = 0;
                return false;
            }

            int k_;
            std::vector<Edge> edges_;
            std::vector<int> color_;
            std::vector<ColorMask> used_;
        };
    }

    auto find_edge_coloring(const Graph &g, int k) -> std::optional<EdgeColoring>
    {
        if (k < 0 || k > 62)
            throw InputError("edge color count " + std::to_string(k) + " outside 0..62");
        return EdgeColorSearch(g, k).run();
    }

    auto chromatic_index(const Graph &g) -> ClassVerdict
    {
        const int delta = g.max_degree();
        if (delta == 0)
            return {0, 1, {0, {}}};
        if (auto col = find_edge_coloring(g, delta))
            return {delta, 1, std::move(*col)};
        auto col = find_edge_coloring(g, delta + 1);
        if (! col)
            throw std::logic_error("edge coloring search failed with max degree + 1 colors");
        return {delta + 1, 2, std::move(*col)};
    }

    auto is_overfull(const Graph &g) -> bool
    {
        return g.size() > g.max_degree() * (g.order() / 2);
    }

    auto verify_edge_coloring(const Graph &g, const EdgeColoring &col) -> bool
    {
        const int n = g.order();
        if (col.colors < 0)
            return false;
        std::vector<int> color(static_cast<std::size_t>(n) * n, 0);
        for (auto [a, b, c] : col.entries) {
            if (a < 0 || b < 0 || a >= n || b >= n || ! g.adjacent(a, b))
                return false;
            if (c < 1 || c > col.colors)
                return false;
            if (color[a * n + b] != 0)
                return false;
            color[a * n + b] = color[b * n + a] = c;
        }
        for (int v = 0; v < n; ++v) {
            std::vector<bool> seen(col.colors + 1, false);
            for (int w = 0; w < n; ++w) {
                if (! g.adjacent(v, w))
                    continue;
                int c = color[v * n + w];
                if (c == 0 || seen[c])
                    return false;
                seen[c] = true;
            }
        }
        return true;
    }
}
