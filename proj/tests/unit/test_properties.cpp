#include "corpus.hpp"
#include "oracles.hpp"

#include "gwb/generators.hpp"
#include "gwb/isomorphism.hpp"
#include "gwb/properties.hpp"

#include <doctest.h>

#include <random>

using namespace gwb;
using namespace gwb::test;

namespace
{
    // Floyd-Warshall; -1 when disconnected.
    auto reference_diameter(const Graph &g) -> int
    {
        const int n = g.order(), inf = 1000;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                d[u][v] = u == v ? 0 : (g.adjacent(u, v) ? 1 : inf);
        for (int k = 0; k < n; ++k)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    d[u][v] = std::min(d[u][v], d[u][k] + d[k][v]);
        int best = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                best = std::max(best, d[u][v]);
        return best >= inf ? -1 : best;
    }

    auto has_triangle(const Graph &g) -> bool
    {
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                for (int c = b + 1; c < g.order(); ++c)
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                        return true;
        return false;
    }

    auto random_perm(int n, std::mt19937_64 &rng) -> std::vector<int>
    {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i)
            p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }
}

TEST_CASE("property examples")
{
    auto p = properties(petersen_graph());
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    CHECK(p.is_regular);
    CHECK(p.regularity == 3);
    CHECK(p.is_triangle_free);
    CHECK(p.diameter == 2);

    auto k33 = properties(complete_bipartite_graph(3, 3));
    CHECK(k33.is_bipartite);
    CHECK(k33.regularity == 3);
    CHECK(k33.is_triangle_free);

    auto e3 = properties(Graph(3));
    CHECK(e3.m == 0);
    CHECK_FALSE(e3.diameter.has_value());
    CHECK_FALSE(e3.is_connected);

    auto c4 = properties(cycle_graph(4));
    CHECK(c4.is_bipartite);
    CHECK(c4.diameter == 2);

    CHECK(properties(path_graph(3)).regularity == -1);
}

TEST_CASE("properties agree with plain oracles on all graphs up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto &g : all_graphs(n)) {
            auto p = properties(g);
            CHECK(p.m == static_cast<int>(g.edges().size()));
            CHECK(p.is_regular == (p.min_degree == p.max_degree));
            CHECK(p.is_bipartite == (naive_chromatic_number(g) <= 2));
            CHECK(p.is_triangle_free == ! has_triangle(g));
            CHECK(p.is_connected == naive_connected(g));
            CHECK(p.diameter.value_or(-1) == reference_diameter(g));
        }
}

TEST_CASE("connectivity examples")
{
    auto k4 = connectivity(complete_graph(4));
    CHECK(k4.kappa == 3);
    CHECK(k4.lambda == 3);
    auto c5 = connectivity(cycle_graph(5));
    CHECK(c5.kappa == 2);
    CHECK(c5.lambda == 2);
    auto pet = connectivity(petersen_graph());
    CHECK(pet.kappa == 3);
    CHECK(pet.lambda == 3);
    auto k1 = connectivity(Graph(1));
    CHECK(k1.kappa == 0);
    CHECK(k1.lambda == 0);
    auto split = connectivity(Graph(4));
    CHECK(split.kappa == 0);
    CHECK(split.lambda == 0);
}

TEST_CASE("connectivity matches exhaustive cuts and the Whitney chain")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto &g : all_graphs(n)) {
            auto c = connectivity(g);
            CHECK(c.kappa == naive_vertex_connectivity(g));
            CHECK(c.lambda == naive_edge_connectivity(g));
            CHECK(c.kappa <= c.lambda);
            CHECK(c.lambda <= g.min_degree());
        }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_graph(11, 0.45, seed);
        auto c = connectivity(g);
        CHECK(c.kappa == naive_vertex_connectivity(g));
        CHECK(c.lambda == naive_edge_connectivity(g));
    }
}

TEST_CASE("planarity examples")
{
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(petersen_graph()));
    CHECK_FALSE(is_planar(complete_bipartite_graph(3, 3)));
    CHECK(is_planar(prism_graph(5)));

    // subdivisions of K5 and K3,3 stay non-planar
    auto k5s = subdivide_edge(subdivide_edge(complete_graph(5), 0, 1), 2, 3);
    CHECK_FALSE(is_planar(k5s));
    auto k33s = subdivide_edge(complete_bipartite_graph(3, 3), 0, 3);
    CHECK_FALSE(is_planar(k33s));
}

TEST_CASE("planar graph counts and Euler bounds")
{
    const std::size_t expected[] = {0, 1, 2, 4, 11, 33, 142, 822, 6966};
    for (int n = 1; n <= 8; ++n) {
        std::size_t planar = 0;
        for (const auto &g : all_graphs(n)) {
            const bool p = is_planar(g);
            planar += p;
            if (n >= 3 && g.size() > 3 * n - 6)
                CHECK_FALSE(p);
            if (n >= 3 && ! has_triangle(g) && g.size() > 2 * n - 4)
                CHECK_FALSE(p);
        }
        CHECK(planar == expected[n]);
    }
}

TEST_CASE("isomorphism examples")
{
    CHECK_FALSE(are_isomorphic(complete_graph(4), cycle_graph(4)).isomorphic);
    std::vector<int> perm{3, 0, 4, 1, 2};
    auto r = are_isomorphic(cycle_graph(5), cycle_graph(5).relabeled(perm));
    CHECK(r.isomorphic);
    CHECK(verify_isomorphism(cycle_graph(5), cycle_graph(5).relabeled(perm), r.witness));
    CHECK(are_isomorphic(Graph(0), Graph(0)).isomorphic);
}

TEST_CASE("isomorphism is reflexive and symmetric on random pairs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 4 + trial % 8;
        const double p = 0.2 + 0.05 * (trial % 10);
        auto g = random_graph(n, p, rng());
        auto h = trial % 2 ? g.relabeled(random_perm(n, rng)) : random_graph(n, p, rng());

        auto self = are_isomorphic(g, g);
        REQUIRE(self.isomorphic);
        CHECK(verify_isomorphism(g, g, self.witness));

        auto gh = are_isomorphic(g, h);
        auto hg = are_isomorphic(h, g);
        CHECK(gh.isomorphic == hg.isomorphic);
        CHECK(gh.isomorphic == (canonical_code(g) == canonical_code(h)));
        if (gh.isomorphic) {
            CHECK(verify_isomorphism(g, h, gh.witness));
            CHECK(verify_isomorphism(h, g, hg.witness));
        }
    }
}

TEST_CASE("isomorphism separates all classes on 6 vertices")
{
    const auto &graphs = all_graphs(6);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(are_isomorphic(graphs[i], graphs[j]).isomorphic);
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy(complete_graph(5)) == 4);
    CHECK(degeneracy(cycle_graph(7)) == 2);
    CHECK(degeneracy(path_graph(4)) == 1);
    CHECK(degeneracy(Graph(3)) == 0);
}
