#include "gwb/graph.hpp"

#include <algorithm>

namespace gwb
{
    Graph::Graph(int n) :
        n_(n)
    {
        if (n < 0 || n > max_vertices)
            throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    }

    auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        GraphBuilder b(n);
        for (auto e : edges)
            b.add_edge(e.u, e.v);
        return b.build();
    }

    auto Graph::size() const -> int
    {
        int total = 0;
        for (int v = 0; v < n_; ++v)
            total += popcount(rows_[v]);
        return total / 2;
    }

    auto Graph::min_degree() const -> int
    {
        if (n_ == 0)
            return 0;
        int d = n_;
        for (int v = 0; v < n_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    auto Graph::max_degree() const -> int
    {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0; u < n_; ++u)
            for_each_bit(rows_[u] & ~all_vertices(u + 1), [&](int v) { result.push_back({u, v}); });
        return result;
    }

    auto Graph::edge_index_table() const -> std::vector<int>
    {
        std::vector<int> table(static_cast<std::size_t>(n_) * n_, -1);
        int idx = 0;
        for (auto [u, v] : edges()) {
            table[u * n_ + v] = idx;
            table[v * n_ + u] = idx;
            ++idx;
        }
        return table;
    }

    auto Graph::without_vertex(int v) const -> Graph
    {
        require_vertex(*this, v);
        return induced(vertices() & ~bit(v));
    }

    auto Graph::without_edge(int u, int v) const -> Graph
    {
        GraphBuilder b(*this);
        if (! b.has_edge(u, v))
            throw InputError("not an edge: " + to_string(make_edge(u, v)));
        return b.remove_edge(u, v).build();
    }

    auto Graph::induced(VertexMask mask) const -> Graph
    {
        mask &= vertices();
        std::vector<int> label(n_, -1);
        int next = 0;
        for_each_bit(mask, [&](int v) { label[v] = next++; });

        GraphBuilder b(next);
        for_each_bit(mask, [&](int u) {
            for_each_bit(rows_[u] & mask & ~all_vertices(u + 1), [&](int w) { b.add_edge(label[u], label[w]); });
        });
        return b.build();
    }

    auto Graph::relabeled(std::span<const int> perm) const -> Graph
    {
        if (static_cast<int>(perm.size()) != n_)
            throw InputError("permutation length does not match graph order");
        VertexMask seen = 0;
        for (int p : perm) {
            if (p < 0 || p >= n_ || (seen & bit(p)))
                throw InputError("not a permutation");
            seen |= bit(p);
        }
        GraphBuilder b(n_);
        for (auto [u, v] : edges())
            b.add_edge(perm[u], perm[v]);
        return b.build();
    }

    auto operator==(const Graph &a, const Graph &b) -> bool
    {
        return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
    }

    GraphBuilder::GraphBuilder(int n) :
        g_(n)
    {
    }

    GraphBuilder::GraphBuilder(const Graph &g) :
        g_(g)
    {
    }

    void GraphBuilder::check_vertex(int v) const
    {
        if (v < 0 || v >= g_.n_)
            throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g_.n_ - 1));
    }

    auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InputError("loop at vertex " + std::to_string(u));
        g_.rows_[u] |= bit(v);
        g_.rows_[v] |= bit(u);
        return *this;
    }

    auto GraphBuilder::remove_edge(int u, int v) -> GraphBuilder &
    {
        check_vertex(u);
        check_vertex(v);
        g_.rows_[u] &= ~bit(v);
        g_.rows_[v] &= ~bit(u);
        return *this;
    }

    auto GraphBuilder::add_vertex() -> int
    {
        if (g_.n_ == max_vertices)
            throw InputError("graph already has " + std::to_string(max_vertices) + " vertices");
        return g_.n_++;
    }

    void require_vertex(const Graph &g, int v)
    {
        if (v < 0 || v >= g.order())
            throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
    }

    auto to_string(const Edge &e) -> std::string
    {
        return std::to_string(e.u) + "-" + std::to_string(e.v);
    }
}
