#include "gwb/list_pack.hpp"

#include "gwb/properties.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

namespace gwb
{
    namespace
    {
        /// Backtracking over (coloring, vertex) cells of the subgraph induced by
        /// vertices 0..active-1. Picks the cell with fewest options each step.
        class PackingSearch
        {
        public:
            PackingSearch(const Graph &g, int active, const ColorSet *lists, int t) :
                g_(g), active_(active), lists_(lists), t_(t),
                color_(static_cast<std::size_t>(t) * active, -1), colored_(t, 0), at_vertex_(active, 0)
            {
            }

            auto run() -> bool
            {
                if (active_ == 0)
                    return true;
                if (t_ == 1)
                    return extend(static_cast<long>(active_));

                // the colorings are interchangeable: at vertex 0 they take increasing colors
                std::vector<int> pool;
                for_each_bit(lists_[0], [&](int c) { pool.push_back(c); });
                if (static_cast<int>(pool.size()) < t_)
                    return false;
                return choose_start(pool, 0, 0);
            }

            auto packing() const -> Packing
            {
                Packing p;
                for (int i = 0; i < t_; ++i)
                    p.colorings.emplace_back(color_.begin() + static_cast<long>(i) * active_,
                        color_.begin() + static_cast<long>(i + 1) * active_);
                return p;
            }

        private:
            auto mask(int v) const -> VertexMask { return g_.neighbors(v) & all_vertices(active_); }

            auto options(int i, int v) const -> ColorSet
            {
                ColorSet forbidden = at_vertex_[v];
                for_each_bit(mask(v) & colored_[i], [&](int w) { forbidden |= ColorSet{1} << color_[i * active_ + w]; });
                return lists_[v] & ~forbidden;
            }

            void place(int i, int v, int c)
            {
                color_[i * active_ + v] = c;
                colored_[i] |= bit(v);
                at_vertex_[v] |= ColorSet{1} << c;
            }

            void unplace(int i, int v, int c)
            {
                color_[i * active_ + v] = -1;
                colored_[i] &= ~bit(v);
                at_vertex_[v] &= ~(ColorSet{1} << c);
            }

            auto choose_start(const std::vector<int> &pool, std::size_t from, int i) -> bool
            {
                if (i == t_)
                    return extend(static_cast<long>(t_) * (active_ - 1));
                for (std::size_t p = from; p + (t_ - i) <= pool.size(); ++p) {
                    place(i, 0, pool[p]);
                    if (choose_start(pool, p + 1, i + 1))
                        return true;
                    unplace(i, 0, pool[p]);
                }
                return false;
            }

            auto extend(long remaining) -> bool
            {
                if (remaining == 0)
                    return true;

                int best_i = -1, best_v = -1, best_count = std::numeric_limits<int>::max();
                ColorSet best_options = 0;
                for (int i = 0; i < t_; ++i) {
                    VertexMask open = all_vertices(active_) & ~colored_[i];
                    while (open) {
                        int v = lowest(open);
                        open &= open - 1;
                        ColorSet o = options(i, v);
                        int c = std::popcount(o);
                        if (c == 0)
                            return false;
                        if (c < best_count) {
                            best_count = c;
                            best_i = i;
                            best_v = v;
                            best_options = o;
                        }
                    }
                }

                while (best_options) {
                    int c = std::countr_zero(best_options);
                    best_options &= best_options - 1;
                    place(best_i, best_v, c);
                    if (extend(remaining - 1))
                        return true;
                    unplace(best_i, best_v, c);
                }
                return false;
            }

            const Graph &g_;
            int active_;
            const ColorSet *lists_;
            int t_;
            std::vector<int> color_;
            std::vector<VertexMask> colored_;
            std::vector<ColorSet> at_vertex_;
        };

        auto packable(const Graph &g, int active, const ColorSet *lists, int t) -> bool
        {
            return PackingSearch(g, active, lists, t).run();
        }

        /// Canonical enumeration of k-list-assignments. A node at depth d has
        /// lists fixed for vertices 0..d-1; `used` colors 0..used-1 have appeared.
        struct SweepNode
        {
            std::vector<ColorSet> lists;
            int depth = 0;
            int used = 0;
            /// A prefix without a t-packing was found when generating this node.
            bool failed_prefix = false;
        };

        class AssignmentWalk
        {
        public:
            AssignmentWalk(const Graph &g, int k, int t) :
                g_(g), n_(g.order()), k_(k), t_(t)
            {
            }

            struct Outcome
            {
                bool failed = false;
                std::vector<ColorSet> witness;
                std::uint64_t checked = 0;
            };

            /// Full depth-first sweep below node.
            auto explore(SweepNode node) -> Outcome
            {
                Outcome out;
                if (node.failed_prefix) {
                    out.failed = true;
                    out.witness = complete(node.lists, node.depth);
                    return out;
                }
                node.lists.resize(n_, 0);
                descend(node.lists, node.depth, node.used, out, -1, nullptr);
                return out;
            }

            /// Nodes at depth `cut` in sweep order. Stops after a failing prefix,
            /// which is appended as a terminal node.
            auto frontier(int cut) -> std::vector<SweepNode>
            {
                std::vector<SweepNode> nodes;
                std::vector<ColorSet> lists(n_, 0);
                Outcome scratch;
                descend(lists, 0, 0, scratch, cut, &nodes);
                return nodes;
            }

        private:
            /// Remaining vertices get the first canonical list {0..k-1}.
            auto complete(std::vector<ColorSet> lists, int from) const -> std::vector<ColorSet>
            {
                lists.resize(n_, 0);
                for (int v = from; v < n_; ++v)
                    lists[v] = (ColorSet{1} << k_) - 1;
                return lists;
            }

            /// Returns false to stop the sweep.
            auto descend(std::vector<ColorSet> &lists, int v, int used, Outcome &out, int cut, std::vector<SweepNode> *nodes) -> bool
            {
                if (v == n_) {
                    ++out.checked;
                    if (! packable(g_, n_, lists.data(), t_)) {
                        out.failed = true;
                        out.witness = lists;
                        return false;
                    }
                    return true;
                }
                if (v == cut) {
                    nodes->push_back({std::vector<ColorSet>(lists.begin(), lists.begin() + v), v, used, false});
                    return true;
                }

                for (int fresh = 0; fresh <= k_; ++fresh) {
                    int old = k_ - fresh;
                    if (old > used || used + fresh > 64)
                        continue;
                    ColorSet fresh_bits = fresh == 0 ? 0 : (((ColorSet{1} << fresh) - 1) << used);
                    if (! for_each_subset(used, old, [&](ColorSet old_bits) {
                            lists[v] = old_bits | fresh_bits;
                            // a prefix that cannot be packed rules out every extension
                            if (v >= 1 && v + 1 < n_ && ! packable(g_, v + 1, lists.data(), t_)) {
                                out.failed = true;
                                out.witness = complete(lists, v + 1);
                                if (nodes)
                                    nodes->push_back({std::vector<ColorSet>(lists.begin(), lists.begin() + v + 1), v + 1,
                                        used + fresh, true});
                                return false;
                            }
                            return descend(lists, v + 1, used + fresh, out, cut, nodes);
                        }))
                        return false;
                }
                return true;
            }

            /// Visits the size-`size` subsets of {0..universe-1} in lexicographic order.
            template <typename F>
            static auto for_each_subset(int universe, int size, F &&visit) -> bool
            {
                std::vector<int> idx(size);
                for (int i = 0; i < size; ++i)
                    idx[i] = i;
                while (true) {
                    ColorSet s = 0;
                    for (int i : idx)
                        s |= ColorSet{1} << i;
                    if (! visit(s))
                        return false;
                    int i = size - 1;
                    while (i >= 0 && idx[i] == universe - size + i)
                        --i;
                    if (i < 0)
                        return true;
                    ++idx[i];
                    for (int j = i + 1; j < size; ++j)
                        idx[j] = idx[j - 1] + 1;
                }
            }

            const Graph &g_;
            int n_, k_, t_;
        };

        void check_sweep_args(const Graph &g, int k, int t)
        {
            if (k < 1 || t < 1)
                throw InputError("list size and packing size must be positive");
            if (g.order() * k > 64)
                throw SizeLimitError("canonical color universe n*k = " + std::to_string(g.order() * k) + " exceeds 64");
        }
    }

    void ListAssignment::validate(const Graph &g) const
    {
        if (static_cast<int>(lists.size()) != g.order())
            throw InputError("list assignment has " + std::to_string(lists.size()) + " lists for "
                + std::to_string(g.order()) + " vertices");
        for (std::size_t v = 0; v < lists.size(); ++v)
            if (lists[v] == 0)
                throw InputError("empty list at vertex " + std::to_string(v));
    }

    auto ListAssignment::uniform_size() const -> std::optional<int>
    {
        if (lists.empty())
            return std::nullopt;
        int k = std::popcount(lists.front());
        for (auto l : lists)
            if (std::popcount(l) != k)
                return std::nullopt;
        return k;
    }

    auto ListAssignment::uniform(int n, ColorSet colors) -> ListAssignment
    {
        return {std::vector<ColorSet>(n, colors)};
    }

    auto find_list_coloring(const Graph &g, const ListAssignment &lists) -> std::optional<VertexColoring>
    {
        lists.validate(g);
        PackingSearch search(g, g.order(), lists.lists.data(), 1);
        if (! search.run())
            return std::nullopt;
        return search.packing().colorings.front();
    }

    auto find_packing(const Graph &g, const ListAssignment &lists, int t) -> std::optional<Packing>
    {
        lists.validate(g);
        if (t < 1)
            throw InputError("packing size must be at least 1");
        PackingSearch search(g, g.order(), lists.lists.data(), t);
        if (! search.run())
            return std::nullopt;
        return search.packing();
    }

    auto verify_packing(const Graph &g, const ListAssignment &lists, const Packing &packing) -> bool
    {
        const int n = g.order();
        if (static_cast<int>(lists.lists.size()) != n)
            return false;
        for (const auto &c : packing.colorings) {
            if (static_cast<int>(c.size()) != n)
                return false;
            for (int v = 0; v < n; ++v)
                if (c[v] < 0 || c[v] >= 64 || ! ((lists.lists[v] >> c[v]) & 1))
                    return false;
            for (auto [u, v] : g.edges())
                if (c[u] == c[v])
                    return false;
        }
        for (std::size_t i = 0; i < packing.colorings.size(); ++i)
            for (std::size_t j = i + 1; j < packing.colorings.size(); ++j)
                for (int v = 0; v < n; ++v)
                    if (packing.colorings[i][v] == packing.colorings[j][v])
                        return false;
        return true;
    }

    auto sweep_assignments(const Graph &g, int k, int t, int jobs) -> AssignmentSweep
    {
        check_sweep_args(g, k, t);
        AssignmentWalk walk(g, k, t);
        AssignmentSweep result;

        const int cut = std::min(3, g.order() - 1);
        if (jobs == 1 || cut < 1) {
            auto out = walk.explore(SweepNode{{}, 0, 0, false});
            result.all_packable = ! out.failed;
            result.assignments_checked = out.checked;
            if (out.failed)
                result.witness = ListAssignment{std::move(out.witness)};
            return result;
        }

        auto nodes = walk.frontier(cut);
        std::vector<AssignmentWalk::Outcome> outcomes(nodes.size());
        std::atomic<long> first_failure{static_cast<long>(nodes.size())};
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (long i = 0; i < static_cast<long>(nodes.size()); ++i) {
            if (i > first_failure.load(std::memory_order_relaxed))
                continue;
            outcomes[i] = walk.explore(nodes[i]);
            if (outcomes[i].failed) {
                long seen = first_failure.load();
                while (i < seen && ! first_failure.compare_exchange_weak(seen, i)) {
                }
            }
        }

        const long stop = first_failure.load();
        for (long i = 0; i < static_cast<long>(nodes.size()) && i <= stop; ++i)
            result.assignments_checked += outcomes[i].checked;
        if (stop < static_cast<long>(nodes.size())) {
            result.all_packable = false;
            result.witness = ListAssignment{std::move(outcomes[stop].witness)};
        }
        return result;
    }

    namespace
    {
        auto least_good_k(const Graph &g, int k_max, const ListLimits &limits, int jobs, bool packing) -> ListNumber
        {
            if (k_max < 1)
                throw InputError("k_max must be at least 1");
            if (g.order() > limits.max_order)
                throw SizeLimitError("list solver refuses " + std::to_string(g.order()) + " vertices (limit "
                    + std::to_string(limits.max_order) + ")");

            ListNumber result;
            if (g.order() == 0) {
                result.value = 1;
                result.lower_bound = 1;
                return result;
            }
            for (int k = 1; k <= k_max; ++k) {
                // greedy along a degeneracy order colors from any lists longer than the degeneracy
                if (! packing && k > degeneracy(g)) {
                    result.value = k;
                    result.lower_bound = k;
                    return result;
                }
                if (k > limits.max_k)
                    throw SizeLimitError("list solver refuses k = " + std::to_string(k) + " (limit "
                        + std::to_string(limits.max_k) + ")");
                auto sweep = sweep_assignments(g, k, packing ? k : 1, jobs);
                result.assignments_checked += sweep.assignments_checked;
                if (sweep.all_packable) {
                    result.value = k;
                    result.lower_bound = k;
                    return result;
                }
                result.witness = std::move(sweep.witness);
                result.lower_bound = k + 1;
            }
            return result;
        }
    }

    auto chi_list(const Graph &g, int k_max, const ListLimits &limits, int jobs) -> ListNumber
    {
        return least_good_k(g, k_max, limits, jobs, false);
    }

    auto chi_star_list(const Graph &g, int k_max, const ListLimits &limits, int jobs) -> ListNumber
    {
        return least_good_k(g, k_max, limits, jobs, true);
    }

    auto removal_gap(const Graph &g, int k_max, const ListLimits &limits, int jobs) -> RemovalGap
    {
        if (g.order() < 2)
            throw InputError("removal gap needs at least 2 vertices");
        auto exact = [&](const Graph &h) {
            auto r = chi_star_list(h, k_max, limits, jobs);
            if (! r.value)
                throw BoundExceededError("list packing number exceeds " + std::to_string(k_max));
            return *r.value;
        };

        RemovalGap gap;
        gap.chi_star = exact(g);
        gap.vertex_gap = std::numeric_limits<int>::min();
        for (int v = 0; v < g.order(); ++v) {
            int d = gap.chi_star - exact(g.without_vertex(v));
            if (d > gap.vertex_gap) {
                gap.vertex_gap = d;
                gap.worst_vertex = v;
            }
        }
        for (auto e : g.edges()) {
            int d = gap.chi_star - exact(g.without_edge(e.u, e.v));
            if (! gap.edge_gap || d > *gap.edge_gap) {
                gap.edge_gap = d;
                gap.worst_edge = e;
            }
        }
        return gap;
    }

    auto format_color_set(ColorSet s) -> std::string
    {
        std::string out = "{";
        bool first = true;
        for_each_bit(s, [&](int c) {
            if (! first)
                out += ",";
            out += std::to_string(c);
            first = false;
        });
        return out + "}";
    }
}
