#include "gwb/generators.hpp"

#include <algorithm>

namespace gwb
{
    namespace
    {
        void require_params(std::string_view family, const std::vector<int> &params, std::size_t count)
        {
            if (params.size() != count)
                throw InputError(std::string(family) + " takes " + std::to_string(count) + " parameter(s), got "
                    + std::to_string(params.size()));
        }

        void require_order(int n, int least)
        {
            if (n < least || n > max_vertices)
                throw InputError("order " + std::to_string(n) + " outside " + std::to_string(least) + ".."
                    + std::to_string(max_vertices));
        }
    }

    auto complete_graph(int n) -> Graph
    {
        require_order(n, 0);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                b.add_edge(u, v);
        return b.build();
    }

    auto cycle_graph(int n) -> Graph
    {
        require_order(n, 3);
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            b.add_edge(i, (i + 1) % n);
        return b.build();
    }

    auto path_graph(int n) -> Graph
    {
        require_order(n, 1);
        GraphBuilder b(n);
        for (int i = 0; i + 1 < n; ++i)
            b.add_edge(i, i + 1);
        return b.build();
    }

    auto star_graph(int leaves) -> Graph
    {
        require_order(leaves + 1, 1);
        GraphBuilder b(leaves + 1);
        for (int i = 1; i <= leaves; ++i)
            b.add_edge(0, i);
        return b.build();
    }

    auto complete_bipartite_graph(int a, int b_size) -> Graph
    {
        if (a < 0 || b_size < 0)
            throw InputError("complete_bipartite sides must be non-negative");
        require_order(a + b_size, 0);
        GraphBuilder b(a + b_size);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b_size; ++v)
                b.add_edge(u, v);
        return b.build();
    }

    auto prism_graph(int k) -> Graph
    {
        require_order(2 * k, 6);
        GraphBuilder b(2 * k);
        for (int i = 0; i < k; ++i) {
            b.add_edge(i, (i + 1) % k);
            b.add_edge(k + i, k + (i + 1) % k);
            b.add_edge(i, k + i);
        }
        return b.build();
    }

    auto petersen_graph() -> Graph
    {
        GraphBuilder b(10);
        for (int i = 0; i < 5; ++i) {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(i, i + 5);
            b.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        return b.build();
    }

    auto circulant_graph(int n, const std::vector<int> &distances) -> Graph
    {
        require_order(n, 1);
        GraphBuilder b(n);
        for (int d : distances) {
            if (d < 1 || d > n / 2)
                throw InputError("circulant distance " + std::to_string(d) + " outside 1.." + std::to_string(n / 2));
            for (int i = 0; i < n; ++i)
                b.add_edge(i, (i + d) % n);
        }
        return b.build();
    }

    auto subdivide_edge(const Graph &g, int u, int v) -> Graph
    {
        require_vertex(g, u);
        require_vertex(g, v);
        if (! g.adjacent(u, v))
            throw InputError("cannot subdivide non-edge " + to_string(make_edge(u, v)));
        GraphBuilder b(g);
        int w = b.add_vertex();
        b.remove_edge(u, v).add_edge(u, w).add_edge(w, v);
        return b.build();
    }

    auto family_names() -> std::vector<std::string>
    {
        return {"empty", "complete", "cycle", "path", "star", "complete_bipartite", "prism", "petersen", "circulant"};
    }

    auto generate(std::string_view family, const std::vector<int> &params) -> Graph
    {
        if (family == "empty") {
            require_params(family, params, 1);
            require_order(params[0], 0);
            return Graph(params[0]);
        }
        if (family == "complete") {
            require_params(family, params, 1);
            return complete_graph(params[0]);
        }
        if (family == "cycle") {
            require_params(family, params, 1);
            return cycle_graph(params[0]);
        }
        if (family == "path") {
            require_params(family, params, 1);
            return path_graph(params[0]);
        }
        if (family == "star") {
            require_params(family, params, 1);
            return star_graph(params[0]);
        }
        if (family == "complete_bipartite") {
            require_params(family, params, 2);
            return complete_bipartite_graph(params[0], params[1]);
        }
        if (family == "prism") {
            require_params(family, params, 1);
            return prism_graph(params[0]);
        }
        if (family == "petersen") {
            require_params(family, params, 0);
            return petersen_graph();
        }
        if (family == "circulant") {
            if (params.empty())
                throw InputError("circulant takes n followed by distances");
            return circulant_graph(params[0], std::vector<int>(params.begin() + 1, params.end()));
        }
        throw InputError("unknown family '" + std::string(family) + "'");
    }
}
