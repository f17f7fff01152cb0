#include "gwb/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace gwb
{
    namespace
    {
        /// Degree followed by the sorted degrees of the neighbours.
        auto vertex_signatures(const Graph &g) -> std::vector<std::vector<int>>
        {
            std::vector<std::vector<int>> sig(g.order());
            for (int v = 0; v < g.order(); ++v) {
                sig[v].push_back(g.degree(v));
                std::vector<int> nd;
                for_each_bit(g.neighbors(v), [&](int w) { nd.push_back(g.degree(w)); });
                std::sort(nd.begin(), nd.end());
                sig[v].insert(sig[v].end(), nd.begin(), nd.end());
            }
            return sig;
        }

        struct Search
        {
            const Graph &g;
            const Graph &h;
            std::vector<int> order;               // vertices of g in matching order
            std::vector<VertexMask> candidates;   // per vertex of g, admissible images
            std::vector<int> image;

            auto extend(std::size_t depth, VertexMask used) -> bool
            {
                if (depth == order.size())
                    return true;
                const int v = order[depth];
                VertexMask options = candidates[v] & ~used;
                while (options) {
                    int w = lowest(options);
                    options &= options - 1;
                    bool consistent = true;
                    for (std::size_t i = 0; i < depth && consistent; ++i) {
                        int u = order[i];
                        consistent = g.adjacent(u, v) == h.adjacent(image[u], w);
                    }
                    if (! consistent)
                        continue;
                    image[v] = w;
                    if (extend(depth + 1, used | bit(w)))
                        return true;
                }
                image[v] = -1;
                return false;
            }
        };
    }

    auto verify_isomorphism(const Graph &g, const Graph &h, std::span<const int> perm) -> bool
    {
        if (g.order() != h.order() || static_cast<int>(perm.size()) != g.order())
            return false;
        VertexMask seen = 0;
        for (int p : perm) {
            if (p < 0 || p >= h.order() || (seen & bit(p)))
                return false;
            seen |= bit(p);
        }
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v]))
                    return false;
        return true;
    }

    auto are_isomorphic(const Graph &g, const Graph &h) -> IsomorphismResult
    {
        const int n = g.order();
        if (n != h.order() || g.size() != h.size())
            return {};

        auto sg = vertex_signatures(g), sh = vertex_signatures(h);
        {
            auto a = sg, b = sh;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                return {};
        }

        Search search{g, h, {}, std::vector<VertexMask>(n, 0), std::vector<int>(n, -1)};
        std::map<std::vector<int>, VertexMask> by_signature;
        for (int w = 0; w < n; ++w)
            by_signature[sh[w]] |= bit(w);
        for (int v = 0; v < n; ++v)
            search.candidates[v] = by_signature[sg[v]];

        // Grow the order from the vertex with fewest candidates, preferring
        // vertices adjacent to ones already placed so consistency checks bite early.
        VertexMask placed = 0;
        while (static_cast<int>(search.order.size()) < n) {
            int best = -1;
            auto key = [&](int v) {
                return std::make_tuple(popcount(g.neighbors(v) & placed) == 0 && placed != 0, popcount(search.candidates[v]),
                    -popcount(g.neighbors(v) & placed), v);
            };
            for_each_bit(g.vertices() & ~placed, [&](int v) {
                if (best < 0 || key(v) < key(best))
                    best = v;
            });
            search.order.push_back(best);
            placed |= bit(best);
        }

        if (! search.extend(0, 0))
            return {};
        return {true, search.image};
    }
}
