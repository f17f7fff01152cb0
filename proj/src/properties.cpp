#include "gwb/properties.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace gwb
{
    auto bfs_distances(const Graph &g, int source) -> std::vector<int>
    {
        require_vertex(g, source);
        std::vector<int> dist(g.order(), -1);
        dist[source] = 0;
        VertexMask seen = bit(source), frontier = bit(source);
        for (int d = 1; frontier; ++d) {
            VertexMask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            next &= ~seen;
            for_each_bit(next, [&](int v) { dist[v] = d; });
            seen |= next;
            frontier = next;
        }
        return dist;
    }

    auto is_connected(const Graph &g) -> bool
    {
        if (g.order() <= 1)
            return true;
        VertexMask seen = 1, frontier = 1;
        while (frontier) {
            VertexMask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == g.vertices();
    }

    auto diameter(const Graph &g) -> std::optional<int>
    {
        int best = 0;
        for (int s = 0; s < g.order(); ++s) {
            auto dist = bfs_distances(g, s);
            for (int d : dist) {
                if (d < 0)
                    return std::nullopt;
                best = std::max(best, d);
            }
        }
        return best;
    }

    auto is_bipartite(const Graph &g) -> bool
    {
        std::vector<int> side(g.order(), -1);
        for (int s = 0; s < g.order(); ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::vector<int> stack{s};
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                bool clash = false;
                for_each_bit(g.neighbors(v), [&](int w) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[v];
                        stack.push_back(w);
                    }
                    else if (side[w] == side[v])
                        clash = true;
                });
                if (clash)
                    return false;
            }
        }
        return true;
    }

    auto is_triangle_free(const Graph &g) -> bool
    {
        for (auto [u, v] : g.edges())
            if (g.neighbors(u) & g.neighbors(v))
                return false;
        return true;
    }

    auto degeneracy(const Graph &g) -> int
    {
        VertexMask alive = g.vertices();
        int result = 0;
        while (alive) {
            int best = -1, best_deg = max_vertices + 1;
            for_each_bit(alive, [&](int v) {
                int d = popcount(g.neighbors(v) & alive);
                if (d < best_deg) {
                    best_deg = d;
                    best = v;
                }
            });
            result = std::max(result, best_deg);
            alive &= ~bit(best);
        }
        return result;
    }

    auto properties(const Graph &g) -> PropertyRecord
    {
        PropertyRecord r;
        r.n = g.order();
        r.m = g.size();
        r.min_degree = g.min_degree();
        r.max_degree = g.max_degree();
        r.is_regular = r.min_degree == r.max_degree;
        r.regularity = r.is_regular ? r.max_degree : -1;
        r.is_bipartite = is_bipartite(g);
        r.is_triangle_free = is_triangle_free(g);
        r.is_connected = is_connected(g);
        r.diameter = diameter(g);
        return r;
    }

    namespace
    {
        /// Dense unit-ish capacity max flow for at most 128 nodes, stopping at limit.
        class SmallFlow
        {
        public:
            explicit SmallFlow(int nodes) :
                nodes_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0)
            {
            }

            void add_arc(int a, int b, int c) { cap_[a * nodes_ + b] += c; }

            auto run(int source, int sink, int limit) -> int
            {
                int flow = 0;
                std::vector<int> parent(nodes_);
                while (flow < limit) {
                    std::fill(parent.begin(), parent.end(), -1);
                    parent[source] = source;
                    std::vector<int> queue{source};
                    for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
                        int a = queue[head];
                        for (int b = 0; b < nodes_; ++b)
                            if (parent[b] < 0 && cap_[a * nodes_ + b] > 0) {
                                parent[b] = a;
                                queue.push_back(b);
                            }
                    }
                    if (parent[sink] < 0)
                        break;
                    for (int b = sink; b != source; b = parent[b]) {
                        cap_[parent[b] * nodes_ + b] -= 1;
                        cap_[b * nodes_ + parent[b]] += 1;
                    }
                    ++flow;
                }
                return flow;
            }

        private:
            int nodes_;
            std::vector<int> cap_;
        };

        auto edge_disjoint_paths(const Graph &g, int s, int t, int limit) -> int
        {
            SmallFlow flow(g.order());
            for (auto [u, v] : g.edges()) {
                flow.add_arc(u, v, 1);
                flow.add_arc(v, u, 1);
            }
            return flow.run(s, t, limit);
        }

        auto vertex_disjoint_paths(const Graph &g, int s, int t, int limit) -> int
        {
            // v_in = 2v, v_out = 2v + 1
            const int n = g.order();
            SmallFlow flow(2 * n);
            for (int v = 0; v < n; ++v)
                flow.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
            for (auto [u, v] : g.edges()) {
                flow.add_arc(2 * u + 1, 2 * v, n);
                flow.add_arc(2 * v + 1, 2 * u, n);
            }
            return flow.run(2 * s + 1, 2 * t, limit);
        }
    }

    auto edge_connectivity(const Graph &g) -> int
    {
        if (g.order() <= 1 || ! is_connected(g))
            return 0;
        int best = g.min_degree();
        for (int t = 1; t < g.order() && best > 0; ++t)
            best = std::min(best, edge_disjoint_paths(g, 0, t, best));
        return best;
    }

    auto vertex_connectivity(const Graph &g) -> int
    {
        const int n = g.order();
        if (n <= 1 || ! is_connected(g))
            return 0;
        if (g.is_complete())
            return n - 1;
        int best = g.min_degree();
        for (int i = 0; i < n && i <= best; ++i)
            for (int j = i + 1; j < n; ++j)
                if (! g.adjacent(i, j))
                    best = std::min(best, vertex_disjoint_paths(g, i, j, best));
        return best;
    }

    auto connectivity(const Graph &g) -> ConnectivityRecord
    {
        return {vertex_connectivity(g), edge_connectivity(g)};
    }

    auto is_planar(const Graph &g) -> bool
    {
        const int n = g.order(), m = g.size();
        if (n <= 4)
            return true;
        if (m > 3 * n - 6)
            return false;

        using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
            boost::property<boost::vertex_index_t, int>, boost::property<boost::edge_index_t, int>>;
        BoostGraph bg(n);
        for (auto [u, v] : g.edges())
            boost::add_edge(u, v, bg);
        return boost::boyer_myrvold_planarity_test(bg);
    }
}
