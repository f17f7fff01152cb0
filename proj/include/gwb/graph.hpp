#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwb
{
    using VertexMask = std::uint64_t;

    inline constexpr int max_vertices = 64;

    /// Raised when an argument violates an operation's precondition
    /// (bad vertex, missing edge, malformed certificate, ...).
    class InputError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when an exact solver refuses an instance beyond its
    /// configured size limit. Distinct from a negative verdict.
    class SizeLimitError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Edge
    {
        int u = 0;
        int v = 0;

        auto operator<=>(const Edge &) const = default;
    };

    inline auto make_edge(int a, int b) -> Edge
    {
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    inline auto bit(int v) -> VertexMask
    {
        return VertexMask{1} << v;
    }

    inline auto popcount(VertexMask m) -> int
    {
        return std::popcount(m);
    }

    inline auto lowest(VertexMask m) -> int
    {
        return std::countr_zero(m);
    }

    /// Calls f(v) for every set bit v of m, ascending.
    template <typename F>
    inline void for_each_bit(VertexMask m, F &&f)
    {
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            f(v);
        }
    }

    inline auto all_vertices(int n) -> VertexMask
    {
        return n >= 64 ? ~VertexMask{0} : (bit(n) - 1);
    }

    /// Undirected simple graph on at most 64 vertices, one adjacency word per
    /// vertex. Immutable once built; use GraphBuilder or the factories.
    class Graph
    {
    public:
        Graph() = default;

        /// Edgeless graph on n vertices.
        explicit Graph(int n);

        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

        auto order() const -> int { return n_; }
        auto size() const -> int;

        auto neighbors(int v) const -> VertexMask { return rows_[v]; }
        auto degree(int v) const -> int { return popcount(rows_[v]); }
        auto adjacent(int u, int v) const -> bool { return (rows_[u] >> v) & 1U; }
        auto vertices() const -> VertexMask { return all_vertices(n_); }

        auto min_degree() const -> int;
        auto max_degree() const -> int;

        /// Edges (u < v) in lexicographic order.
        auto edges() const -> std::vector<Edge>;

        /// Index of each edge in edges(), or -1; an n*n table.
        auto edge_index_table() const -> std::vector<int>;

        /// Vertices above v shift down by one.
        auto without_vertex(int v) const -> Graph;
        auto without_edge(int u, int v) const -> Graph;

        /// Induced subgraph on the vertices of mask, relabeled in increasing order.
        auto induced(VertexMask mask) const -> Graph;

        /// Vertex v of this graph becomes perm[v].
        auto relabeled(std::span<const int> perm) const -> Graph;

        auto is_complete() const -> bool { return size() == n_ * (n_ - 1) / 2; }

        friend auto operator==(const Graph &a, const Graph &b) -> bool;

    private:
        friend class GraphBuilder;

        int n_ = 0;
        std::array<VertexMask, max_vertices> rows_{};
    };

    /// Mutable staging area for a Graph. Rejects loops and out-of-range vertices.
    class GraphBuilder
    {
    public:
        explicit GraphBuilder(int n);
        explicit GraphBuilder(const Graph &g);

        auto add_edge(int u, int v) -> GraphBuilder &;
        auto remove_edge(int u, int v) -> GraphBuilder &;
        auto add_vertex() -> int;
        auto has_edge(int u, int v) const -> bool { return (g_.rows_[u] >> v) & 1U; }
        auto order() const -> int { return g_.n_; }

        auto build() const -> Graph { return g_; }

    private:
        void check_vertex(int v) const;

        Graph g_;
    };

    /// Throws InputError unless v is a vertex of g.
    void require_vertex(const Graph &g, int v);

    auto to_string(const Edge &e) -> std::string;
}
