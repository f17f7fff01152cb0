#include "gwb/crumby.hpp"

namespace gwb
{
    namespace
    {
        auto extend_path(const Graph &g, VertexMask mask, std::vector<int> &path, VertexMask on_path, int edges) -> bool
        {
            if (static_cast<int>(path.size()) == edges + 1)
                return true;
            VertexMask options = g.neighbors(path.back()) & mask & ~on_path;
            while (options) {
                int w = lowest(options);
                options &= options - 1;
                path.push_back(w);
                if (extend_path(g, mask, path, on_path | bit(w), edges))
                    return true;
                path.pop_back();
            }
            return false;
        }

        auto component_of(const Graph &g, VertexMask mask, int v) -> VertexMask
        {
            VertexMask seen = bit(v), frontier = bit(v);
            while (frontier) {
                VertexMask next = 0;
                for_each_bit(frontier, [&](int x) { next |= g.neighbors(x); });
                frontier = next & mask & ~seen;
                seen |= frontier;
            }
            return seen;
        }

        void check_params(const CrumbyParams &p)
        {
            if (p.max_blue_degree < 0 || p.min_red_degree < 0 || p.forbidden_red_path_edges < 0)
                throw InputError("crumby parameters must be non-negative");
        }

        class CrumbyBacktrack
        {
        public:
            CrumbyBacktrack(const Graph &g, const CrumbyParams &p) :
                g_(g), p_(p)
            {
            }

            auto run() -> std::optional<Bipartition>
            {
                if (assign(0))
                    return Bipartition{blue_};
                return std::nullopt;
            }

        private:
            auto undecided(int next) const -> VertexMask { return g_.vertices() & ~all_vertices(next); }

            auto red_can_reach_min(int w, int next) const -> bool
            {
                return popcount(g_.neighbors(w) & (red_ | undecided(next))) >= p_.min_red_degree;
            }

            auto assign(int v) -> bool
            {
                if (v == g_.order())
                    return true;

                // red
                red_ |= bit(v);
                if (red_ok(v) && assign(v + 1))
                    return true;
                red_ &= ~bit(v);

                blue_ |= bit(v);
                if (blue_ok(v) && assign(v + 1))
                    return true;
                blue_ &= ~bit(v);
                return false;
            }

            auto red_ok(int v) const -> bool
            {
                if (! red_can_reach_min(v, v + 1))
                    return false;
                VertexMask comp = component_of(g_, red_, v);
                return find_path_in(g_, comp, p_.forbidden_red_path_edges).empty();
            }

            auto blue_ok(int v) const -> bool
            {
                if (popcount(g_.neighbors(v) & blue_) > p_.max_blue_degree)
                    return false;
                bool ok = true;
                for_each_bit(g_.neighbors(v) & blue_, [&](int w) { ok = ok && popcount(g_.neighbors(w) & blue_) <= p_.max_blue_degree; });
                for_each_bit(g_.neighbors(v) & red_, [&](int w) { ok = ok && red_can_reach_min(w, v + 1); });
                return ok;
            }

            const Graph &g_;
            const CrumbyParams &p_;
            VertexMask blue_ = 0, red_ = 0;
        };
    }

    auto to_string(CrumbyClause c) -> std::string
    {
        switch (c) {
        case CrumbyClause::none: return "none";
        case CrumbyClause::blue_degree: return "blue-degree";
        case CrumbyClause::red_degree: return "red-degree";
        case CrumbyClause::red_path: return "red-path";
        }
        return "?";
    }

    auto find_path_in(const Graph &g, VertexMask mask, int edges) -> std::vector<int>
    {
        mask &= g.vertices();
        if (edges < 0 || edges >= popcount(mask))
            return {};
        std::vector<int> path;
        for (VertexMask starts = mask; starts; starts &= starts - 1) {
            int s = lowest(starts);
            path.assign(1, s);
            if (extend_path(g, mask, path, bit(s), edges))
                return path;
        }
        return {};
    }

    auto check_crumby(const Graph &g, const Bipartition &p, const CrumbyParams &params) -> CrumbyCheck
    {
        check_params(params);
        const VertexMask blue = p.blue & g.vertices(), red = p.red(g);

        for (int v = 0; v < g.order(); ++v)
            if ((blue & bit(v)) && popcount(g.neighbors(v) & blue) > params.max_blue_degree)
                return {false, CrumbyClause::blue_degree, {v}};
        for (int v = 0; v < g.order(); ++v)
            if ((red & bit(v)) && popcount(g.neighbors(v) & red) < params.min_red_degree)
                return {false, CrumbyClause::red_degree, {v}};
        if (auto path = find_path_in(g, red, params.forbidden_red_path_edges); ! path.empty())
            return {false, CrumbyClause::red_path, std::move(path)};
        return {};
    }

    auto find_crumby(const Graph &g, const CrumbyParams &params, CrumbyStrategy strategy) -> std::optional<Bipartition>
    {
        check_params(params);
        if (strategy == CrumbyStrategy::automatic)
            strategy = g.order() <= crumby_enumeration_limit ? CrumbyStrategy::enumerate : CrumbyStrategy::backtrack;

        if (strategy == CrumbyStrategy::backtrack)
            return CrumbyBacktrack(g, params).run();

        if (g.order() > 30)
            throw SizeLimitError("plain enumeration refuses more than 30 vertices");
        const std::uint64_t total = std::uint64_t{1} << g.order();
        for (std::uint64_t blue = 0; blue < total; ++blue)
            if (check_crumby(g, {blue}, params).ok)
                return Bipartition{blue};
        return std::nullopt;
    }

    auto relaxation_scan(const Graph &g, const std::vector<CrumbyParams> &lattice) -> std::vector<RelaxationPoint>
    {
        std::vector<RelaxationPoint> result;
        result.reserve(lattice.size());
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            RelaxationPoint point{lattice[i], false, std::nullopt, std::nullopt};
            for (std::size_t j = 0; j < i && ! point.inherited_from; ++j) {
                const auto &earlier = result[j];
                if (earlier.exists && earlier.params.no_weaker_than(point.params)) {
                    point.exists = true;
                    point.witness = earlier.witness;
                    point.inherited_from = j;
                }
                else if (! earlier.exists && point.params.no_weaker_than(earlier.params))
                    point.inherited_from = j;
            }
            if (! point.inherited_from) {
                point.witness = find_crumby(g, point.params);
                point.exists = point.witness.has_value();
            }
            result.push_back(std::move(point));
        }
        return result;
    }
}
