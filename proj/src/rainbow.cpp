#include "gwb/rainbow.hpp"

#include "gwb/properties.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include <omp.h>

namespace gwb
{
    namespace
    {
        constexpr int dense_color_limit = 12;
        constexpr int sparse_color_limit = 56;

        /// Rainbow walks over (vertex, used colors, uncolored edges taken) states.
        /// Colors are 1..k in `table`; 0 marks an uncolored edge, which in the
        /// optimistic reading may take any color not yet on the walk.
        class RainbowReach
        {
        public:
            RainbowReach(const Graph &g, int k, const std::vector<int> &table) :
                g_(g), n_(g.order()), k_(k), table_(table)
            {
                if (k_ > sparse_color_limit)
                    throw SizeLimitError("rainbow search supports at most " + std::to_string(sparse_color_limit) + " colors");
                if (k_ <= dense_color_limit)
                    stamp_.assign(static_cast<std::size_t>(n_) * (k_ + 1) << k_, 0);
                else
                    sparse_.resize(n_);
            }

            /// Vertices reachable from s by a walk whose colored edges carry
            /// distinct colors and whose length fits in k colors.
            auto reach(int s) -> VertexMask
            {
                ++generation_;
                for (auto &set : sparse_)
                    set.clear();

                VertexMask reached = bit(s);
                std::vector<std::pair<int, std::uint64_t>> stack; // vertex, mask | uncolored << 56
                visit(s, 0, 0, stack);
                while (! stack.empty()) {
                    auto [v, key] = stack.back();
                    stack.pop_back();
                    const std::uint64_t mask = key & ((std::uint64_t{1} << 56) - 1);
                    const int uncolored = static_cast<int>(key >> 56);
                    const int length = std::popcount(mask) + uncolored;
                    if (length >= k_)
                        continue;
                    for_each_bit(g_.neighbors(v), [&](int w) {
                        int c = table_[v * n_ + w];
                        if (c == 0) {
                            if (visit(w, mask, uncolored + 1, stack))
                                reached |= bit(w);
                        }
                        else if (! (mask >> (c - 1) & 1)) {
                            if (visit(w, mask | (std::uint64_t{1} << (c - 1)), uncolored, stack))
                                reached |= bit(w);
                        }
                    });
                }
                return reached;
            }

        private:
            auto visit(int v, std::uint64_t mask, int uncolored, std::vector<std::pair<int, std::uint64_t>> &stack) -> bool
            {
                if (k_ <= dense_color_limit) {
                    std::size_t idx = ((static_cast<std::size_t>(v) * (k_ + 1) + uncolored) << k_) | mask;
                    if (stamp_[idx] == generation_)
                        return true;
                    stamp_[idx] = generation_;
                }
                else if (! sparse_[v].insert(mask | (std::uint64_t(uncolored) << 56)).second)
                    return true;
                stack.emplace_back(v, mask | (std::uint64_t(uncolored) << 56));
                return true;
            }

            const Graph &g_;
            int n_, k_;
            const std::vector<int> &table_;
            std::vector<std::uint32_t> stamp_;
            std::uint32_t generation_ = 0;
            std::vector<std::unordered_set<std::uint64_t>> sparse_;
        };

        auto color_table(const Graph &g, const EdgeColorAssignment &col) -> std::vector<int>
        {
            const int n = g.order();
            if (col.colors < 1 && g.size() > 0)
                throw InputError("edge color assignment needs at least one color");
            std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
            for (auto [u, v, c] : col.entries) {
                if (u < 0 || v < 0 || u >= n || v >= n || ! g.adjacent(u, v))
                    throw InputError("colored pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
                if (c < 1 || c > col.colors)
                    throw InputError("color " + std::to_string(c) + " outside 1.." + std::to_string(col.colors));
                if (table[u * n + v] != 0)
                    throw InputError("edge " + to_string(make_edge(u, v)) + " colored twice");
                table[u * n + v] = table[v * n + u] = c;
            }
            for (auto [u, v] : g.edges())
                if (table[u * n + v] == 0)
                    throw InputError("uncolored edge " + to_string(Edge{u, v}));
            return table;
        }

        /// Edges in breadth-first discovery order from vertex 0.
        auto bfs_edge_order(const Graph &g) -> std::vector<Edge>
        {
            std::vector<Edge> order;
            std::vector<bool> done(static_cast<std::size_t>(g.order()) * g.order(), false);
            std::vector<int> queue{0};
            VertexMask seen = bit(0);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                for_each_bit(g.neighbors(v), [&](int w) {
                    auto e = make_edge(v, w);
                    if (! done[e.u * g.order() + e.v]) {
                        done[e.u * g.order() + e.v] = true;
                        order.push_back(e);
                    }
                    if (! (seen & bit(w))) {
                        seen |= bit(w);
                        queue.push_back(w);
                    }
                });
            }
            return order;
        }

        class RainbowColoringSearch
        {
        public:
            RainbowColoringSearch(const Graph &g, int k) :
                g_(g), k_(k), edges_(bfs_edge_order(g)), table_(static_cast<std::size_t>(g.order()) * g.order(), 0),
                reach_(g, k, table_)
            {
            }

            auto run() -> std::optional<EdgeColorAssignment>
            {
                if (! feasible() || ! extend(0, 0))
                    return std::nullopt;
                EdgeColorAssignment col{k_, {}};
                for (auto [u, v] : g_.edges())
                    col.entries.push_back({u, v, table_[u * g_.order() + v]});
                return col;
            }

        private:
            auto feasible() -> bool
            {
                for (int s = 0; s + 1 < g_.order(); ++s)
                    if ((reach_.reach(s) | all_vertices(s + 1)) != g_.vertices())
                        return false;
                return true;
            }

            auto extend(std::size_t idx, int highest) -> bool
            {
                if (idx == edges_.size())
                    return true;
                auto [u, v] = edges_[idx];
                const int n = g_.order();
                for (int c = 1; c <= std::min(k_, highest + 1); ++c) {
                    table_[u * n + v] = table_[v * n + u] = c;
                    if (feasible() && extend(idx + 1, std::max(highest, c)))
                        return true;
                }
                table_[u * n + v] = table_[v * n + u] = 0;
                return false;
            }

            const Graph &g_;
            int k_;
            std::vector<Edge> edges_;
            std::vector<int> table_;
            RainbowReach reach_;
        };

        /// Distinct colors on a breadth-first spanning tree, color 1 elsewhere.
        auto spanning_tree_coloring(const Graph &g) -> EdgeColorAssignment
        {
            const int n = g.order();
            std::vector<int> table(static_cast<std::size_t>(n) * n, 1);
            int next = 1;
            std::vector<int> queue{0};
            VertexMask seen = bit(0);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                for_each_bit(g.neighbors(v) & ~seen, [&](int w) {
                    seen |= bit(w);
                    queue.push_back(w);
                    table[v * n + w] = table[w * n + v] = next++;
                });
            }
            EdgeColorAssignment col{std::max(1, n - 1), {}};
            for (auto [u, v] : g.edges())
                col.entries.push_back({u, v, table[u * n + v]});
            return col;
        }
    }

    auto is_rainbow_connected(const Graph &g, const EdgeColorAssignment &col) -> RainbowCheck
    {
        auto table = color_table(g, col);
        if (! is_connected(g))
            return {false, true, std::nullopt};
        if (g.order() <= 1)
            return {true, false, std::nullopt};

        RainbowReach reach(g, col.colors, table);
        for (int s = 0; s + 1 < g.order(); ++s) {
            VertexMask missing = g.vertices() & ~all_vertices(s + 1) & ~reach.reach(s);
            if (missing)
                return {false, false, std::make_pair(s, lowest(missing))};
        }
        return {true, false, std::nullopt};
    }

    auto find_rainbow_coloring(const Graph &g, int k) -> std::optional<EdgeColorAssignment>
    {
        if (k < 1)
            throw InputError("rainbow coloring needs at least one color");
        if (g.order() <= 1)
            return EdgeColorAssignment{k, {}};
        if (! is_connected(g))
            return std::nullopt;
        if (k >= g.order() - 1) {
            auto col = spanning_tree_coloring(g);
            col.colors = k;
            return col;
        }
        return RainbowColoringSearch(g, k).run();
    }

    auto rainbow_connection_number(const Graph &g, int cap) -> RcVerdict
    {
        RcVerdict verdict;
        if (! is_connected(g)) {
            verdict.status = RcVerdict::Status::disconnected;
            return verdict;
        }
        const int n = g.order();
        if (n <= 1)
            return verdict;
        if (cap < 0)
            cap = n - 1;

        const int start = std::max(1, *diameter(g));
        for (int k = start; k <= cap; ++k) {
            if (k >= n - 1) {
                verdict.rc = n - 1;
                verdict.certificate = spanning_tree_coloring(g);
                return verdict;
            }
            if (auto col = find_rainbow_coloring(g, k)) {
                verdict.rc = k;
                verdict.certificate = std::move(*col);
                return verdict;
            }
        }
        verdict.status = RcVerdict::Status::cap_exceeded;
        verdict.rc = std::max(cap + 1, start);
        return verdict;
    }

    auto parse_rational(const std::string &text) -> Rational
    {
        auto fail = [&] { return InputError("cannot parse rational '" + text + "'"); };
        auto parse_long = [&](std::string_view s) {
            long value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
                throw fail();
            return value;
        };

        std::string_view s(text);
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            Rational r{parse_long(s.substr(0, slash)), parse_long(s.substr(slash + 1))};
            if (r.den == 0)
                throw fail();
            if (r.den < 0) {
                r.num = -r.num;
                r.den = -r.den;
            }
            return r;
        }
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            bool negative = s.starts_with('-');
            std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
            if (frac.empty() || frac.size() > 9 || frac.starts_with('-') || frac.starts_with('+'))
                throw fail();
            long den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            long w = (whole.empty() || whole == "-") ? 0 : parse_long(whole);
            long f = parse_long(frac);
            long num = std::labs(w) * den + f;
            return {negative ? -num : num, den};
        }
        return {parse_long(s), 1};
    }

    auto meets_min_degree(const Graph &g, const Rational &offset) -> bool
    {
        // delta >= n/2 + p/q  <=>  2 q delta >= q n + 2 p   (q > 0)
        return 2 * offset.den * g.min_degree() >= offset.den * g.order() + 2 * offset.num;
    }

    auto mindeg_scan(const std::vector<Graph> &corpus, const Rational &offset, int jobs) -> MindegReport
    {
        MindegReport report;
        std::vector<std::size_t> qualifying;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const Graph &g = corpus[i];
            if (g.is_complete())
                ++report.complete_skipped;
            else if (! is_connected(g))
                ++report.disconnected_skipped;
            else if (! meets_min_degree(g, offset))
                ++report.below_threshold;
            else
                qualifying.push_back(i);
        }

        report.rows.resize(qualifying.size());
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (long j = 0; j < static_cast<long>(qualifying.size()); ++j) {
            const std::size_t i = qualifying[j];
            report.rows[j] = {i, corpus[i], rainbow_connection_number(corpus[i])};
        }
        for (const auto &row : report.rows)
            if (row.verdict.rc > 2)
                report.findings.push_back(row.index);
        return report;
    }
}
