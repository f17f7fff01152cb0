#include "gwb/matching.hpp"

#include <algorithm>

namespace gwb
{
    namespace
    {
        /// Depth-first pairing of the lowest unmatched vertex.
        class PairingWalk
        {
        public:
            PairingWalk(const Graph &g, const std::function<bool(const Matching &)> &visit) :
                g_(g), visit_(visit)
            {
                for (int v = 0; v < g.order(); ++v)
                    rows_.push_back(g.neighbors(v));
            }

            void ban(const Edge &e)
            {
                rows_[e.u] &= ~bit(e.v);
                rows_[e.v] &= ~bit(e.u);
            }

            /// False iff the visitor asked to stop.
            auto run() -> bool
            {
                if (g_.order() % 2 != 0)
                    return true;
                return extend(g_.vertices());
            }

        private:
            auto extend(VertexMask unmatched) -> bool
            {
                if (! unmatched)
                    return visit_(current_);
                bool dead = false;
                for_each_bit(unmatched, [&](int x) { dead = dead || ! (rows_[x] & unmatched); });
                if (dead)
                    return true;

                int v = lowest(unmatched);
                VertexMask options = rows_[v] & unmatched;
                while (options) {
                    int w = lowest(options);
                    options &= options - 1;
                    current_.push_back({v, w});
                    bool go_on = extend(unmatched & ~bit(v) & ~bit(w));
                    current_.pop_back();
                    if (! go_on)
                        return false;
                }
                return true;
            }

            const Graph &g_;
            const std::function<bool(const Matching &)> &visit_;
            std::vector<VertexMask> rows_;
            Matching current_;
        };
    }

    auto for_each_perfect_matching(const Graph &g, const std::function<bool(const Matching &)> &visit) -> bool
    {
        return PairingWalk(g, visit).run();
    }

    auto perfect_matchings(const Graph &g, std::uint64_t cap) -> MatchingEnumeration
    {
        MatchingEnumeration result;
        bool complete = for_each_perfect_matching(g, [&](const Matching &m) {
            if (result.matchings.size() >= cap) {
                result.truncated = true;
                return false;
            }
            result.matchings.push_back(m);
            return true;
        });
        result.truncated = ! complete;
        return result;
    }

    auto count_perfect_matchings(const Graph &g, std::uint64_t cap) -> std::pair<std::uint64_t, bool>
    {
        std::uint64_t count = 0;
        bool complete = for_each_perfect_matching(g, [&](const Matching &) {
            if (count >= cap)
                return false;
            ++count;
            return true;
        });
        return {count, ! complete};
    }

    auto find_perfect_matching_avoiding(const Graph &g, const Matching &banned) -> std::optional<Matching>
    {
        std::optional<Matching> found;
        std::function<bool(const Matching &)> visit = [&](const Matching &m) {
            found = m;
            return false;
        };
        PairingWalk walk(g, visit);
        for (const auto &e : banned)
            walk.ban(e);
        walk.run();
        return found;
    }

    auto is_perfect_matching(const Graph &g, const Matching &m) -> bool
    {
        VertexMask covered = 0;
        for (auto [u, v] : m) {
            if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
                return false;
            if (covered & (bit(u) | bit(v)))
                return false;
            covered |= bit(u) | bit(v);
        }
        return covered == g.vertices();
    }

    auto edge_disjoint(const Matching &a, const Matching &b) -> bool
    {
        for (const auto &e : a)
            for (const auto &f : b)
                if (make_edge(e.u, e.v) == make_edge(f.u, f.v))
                    return false;
        return true;
    }

    auto is_poorly_matchable(const Graph &g, std::uint64_t count_cap) -> PoorMatchabilityVerdict
    {
        PoorMatchabilityVerdict verdict;
        std::tie(verdict.pm_count, verdict.count_truncated) = count_perfect_matchings(g, count_cap);
        if (verdict.pm_count < 2)
            return verdict;

        for_each_perfect_matching(g, [&](const Matching &first) {
            if (auto second = find_perfect_matching_avoiding(g, first)) {
                verdict.witness = std::make_pair(first, std::move(*second));
                return false;
            }
            return true;
        });
        verdict.poorly_matchable = ! verdict.witness.has_value();
        return verdict;
    }

    auto has_two_disjoint_pms(const Graph &g, std::uint64_t count_cap) -> DisjointPairVerdict
    {
        auto poor = is_poorly_matchable(g, count_cap);
        return {! poor.poorly_matchable, poor.pm_count, poor.count_truncated, std::move(poor.witness)};
    }

    auto cut_size(const Graph &g, VertexMask set) -> int
    {
        set &= g.vertices();
        int total = 0;
        for_each_bit(set, [&](int v) { total += popcount(g.neighbors(v) & ~set); });
        return total;
    }

    auto is_r_graph(const Graph &g, int r) -> RGraphVerdict
    {
        const int n = g.order();
        if (n > r_graph_max_order)
            throw SizeLimitError("odd-set sweep refuses " + std::to_string(n) + " vertices (limit "
                + std::to_string(r_graph_max_order) + ")");
        if (r < 0)
            throw InputError("r must be non-negative");

        for (int v = 0; v < n; ++v)
            if (g.degree(v) != r) {
                RGraphVerdict verdict{false, "not r-regular", std::nullopt};
                if (g.degree(v) < r)
                    verdict.witness = OddCutWitness{bit(v), g.degree(v)};
                return verdict;
            }

        VertexMask set = 0;
        int cut = 0;
        const std::uint64_t subsets = std::uint64_t{1} << n;
        for (std::uint64_t i = 1; i < subsets; ++i) {
            int v = std::countr_zero(i);
            int inside = popcount(g.neighbors(v) & set);
            if (set & bit(v)) {
                set &= ~bit(v);
                cut -= r - 2 * inside;
            }
            else {
                set |= bit(v);
                cut += r - 2 * inside;
            }
            if ((popcount(set) & 1) && cut < r)
                return {false, "odd cut below r", OddCutWitness{set, cut}};
        }
        return {true, "", std::nullopt};
    }
}
