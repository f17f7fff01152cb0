#include "corpus.hpp"
#include "oracles.hpp"

#include "gwb/generators.hpp"
#include "gwb/list_pack.hpp"
#include "gwb/properties.hpp"

#include <doctest.h>

#include <random>

using namespace gwb;
using namespace gwb::test;

namespace
{
    auto lists_of(std::vector<std::vector<int>> raw) -> ListAssignment
    {
        ListAssignment l;
        for (const auto &colors : raw) {
            ColorSet s = 0;
            for (int c : colors)
                s |= ColorSet{1} << c;
            l.lists.push_back(s);
        }
        return l;
    }

    auto to_raw(const ListAssignment &l) -> Lists
    {
        Lists raw;
        for (auto s : l.lists) {
            raw.emplace_back();
            for_each_bit(s, [&](int c) { raw.back().push_back(c); });
        }
        return raw;
    }

    auto renamed(const ListAssignment &l, std::mt19937_64 &rng) -> ListAssignment
    {
        std::vector<int> target(64);
        for (int i = 0; i < 64; ++i)
            target[i] = i;
        std::shuffle(target.begin(), target.end(), rng);
        ListAssignment out;
        for (auto s : l.lists) {
            ColorSet t = 0;
            for_each_bit(s, [&](int c) { t |= ColorSet{1} << target[c]; });
            out.lists.push_back(t);
        }
        return out;
    }

    auto random_lists(int n, int k, int universe, std::mt19937_64 &rng) -> ListAssignment
    {
        ListAssignment l;
        for (int v = 0; v < n; ++v) {
            std::vector<int> colors(universe);
            for (int c = 0; c < universe; ++c)
                colors[c] = c;
            std::shuffle(colors.begin(), colors.end(), rng);
            ColorSet s = 0;
            for (int i = 0; i < k; ++i)
                s |= ColorSet{1} << colors[i];
            l.lists.push_back(s);
        }
        return l;
    }
}

TEST_CASE("list coloring examples")
{
    auto c4 = find_list_coloring(cycle_graph(4), lists_of({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
    REQUIRE(c4);
    CHECK(*c4 == VertexColoring{1, 2, 1, 2});

    auto k33_lists = lists_of({{1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(find_list_coloring(complete_bipartite_graph(3, 3), k33_lists));
    CHECK_FALSE(find_list_coloring(complete_graph(2), lists_of({{1}, {1}})));
}

TEST_CASE("packing examples")
{
    auto k2 = lists_of({{1, 2}, {1, 2}});
    auto p = find_packing(complete_graph(2), k2, 2);
    REQUIRE(p);
    CHECK(verify_packing(complete_graph(2), k2, *p));
    CHECK(p->colorings.size() == 2);

    auto k1 = lists_of({{1, 2, 3}});
    auto q = find_packing(Graph(1), k1, 3);
    REQUIRE(q);
    CHECK(verify_packing(Graph(1), k1, *q));

    auto c4 = lists_of({{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    auto r = find_packing(cycle_graph(4), c4, 2);
    REQUIRE(r);
    CHECK(verify_packing(cycle_graph(4), c4, *r));
    for (const auto &col : r->colorings)
        CHECK((col == VertexColoring{1, 2, 1, 2} || col == VertexColoring{2, 1, 2, 1}));
}

TEST_CASE("packing verifier checks each clause")
{
    auto g = complete_graph(2);
    auto l = lists_of({{1, 2}, {1, 2}});
    CHECK(verify_packing(g, l, {{{1, 2}, {2, 1}}}));
    CHECK_FALSE(verify_packing(g, l, {{{1, 1}, {2, 2}}}));    // improper
    CHECK_FALSE(verify_packing(g, l, {{{1, 3}, {2, 1}}}));    // outside list
    CHECK_FALSE(verify_packing(g, l, {{{1, 2}, {1, 2}}}));    // not disjoint
    CHECK_FALSE(verify_packing(g, l, {{{1}, {2, 1}}}));       // wrong length
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(find_list_coloring(complete_graph(2), lists_of({{1}})), InputError);
    CHECK_THROWS_AS(find_list_coloring(complete_graph(2), ListAssignment{{1, 0}}), InputError);
    CHECK_THROWS_AS(find_packing(complete_graph(2), lists_of({{1}, {2}}), 0), InputError);
    CHECK_THROWS_AS(chi_star_list(complete_graph(9), 4), SizeLimitError);
    CHECK_THROWS_AS(chi_list(complete_graph(6), 6), SizeLimitError);
    CHECK_THROWS_AS(removal_gap(Graph(1), 3), InputError);
    CHECK_THROWS_AS(removal_gap(complete_graph(3), 2), BoundExceededError);
}

TEST_CASE("choosability examples")
{
    auto c4 = chi_list(cycle_graph(4), 4);
    CHECK(c4.value == 2);
    REQUIRE(c4.witness);
    CHECK(c4.witness->uniform_size() == 1);

    CHECK(chi_list(complete_graph(4), 4).value == 4);

    auto k33 = chi_list(complete_bipartite_graph(3, 3), 3);
    CHECK(k33.value == 3);
    REQUIRE(k33.witness);
    CHECK(*k33.witness == lists_of({{0, 1}, {0, 2}, {1, 2}, {0, 1}, {0, 2}, {1, 2}}));

    auto capped = chi_list(complete_graph(4), 3);
    CHECK_FALSE(capped.value);
    CHECK(capped.lower_bound == 4);
}

TEST_CASE("list packing number examples")
{
    CHECK(chi_star_list(complete_graph(2), 4).value == 2);
    CHECK(chi_star_list(complete_graph(3), 4).value == 3);
    CHECK(chi_star_list(path_graph(3), 4).value == 2);
    CHECK(chi_star_list(Graph(1), 4).value == 1);
    CHECK(chi_star_list(Graph(0), 4).value == 1);

    // Every 2-assignment of C4 was expected to pack; the search finds one that does not.
    auto c4 = chi_star_list(cycle_graph(4), 4);
    CHECK(c4.value == 3);
    REQUIRE(c4.witness);
    CHECK_FALSE(find_packing(cycle_graph(4), *c4.witness, 2));
    CHECK_FALSE(naive_packable(cycle_graph(4), to_raw(*c4.witness), 2));
    CHECK(naive_failing_assignment(cycle_graph(4), 2, 2).has_value());
}

TEST_CASE("removal gaps")
{
    auto k2 = removal_gap(complete_graph(2), 4);
    CHECK(k2.chi_star == 2);
    CHECK(k2.vertex_gap == 1);
    CHECK(k2.edge_gap == 1);

    auto c4 = removal_gap(cycle_graph(4), 4);
    CHECK(c4.chi_star == 3);
    CHECK(c4.vertex_gap == 1);   // P3 packs with 2
    CHECK(c4.edge_gap == 1);

    auto e2 = removal_gap(Graph(2), 4);
    CHECK(e2.vertex_gap == 0);
    CHECK_FALSE(e2.edge_gap);
}

TEST_CASE("sweep verdicts match the naive oracle")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto &g : all_graphs(n))
            for (int k = 1; k <= 2; ++k)
                for (int t = 1; t <= k; ++t) {
                    auto sweep = sweep_assignments(g, k, t);
                    auto naive = naive_failing_assignment(g, k, t);
                    CHECK(sweep.all_packable == ! naive.has_value());
                    if (sweep.witness)
                        CHECK_FALSE(naive_packable(g, to_raw(*sweep.witness), t));
                }
    for (const auto &g : all_graphs(3))
        for (int t = 1; t <= 3; ++t)
            CHECK(sweep_assignments(g, 3, t).all_packable == ! naive_failing_assignment(g, 3, t).has_value());
}

TEST_CASE("list numbers match the naive oracle on small graphs")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto &g : all_graphs(n)) {
            CHECK(chi_list(g, 4).value == naive_choosability(g));
            if (! g.is_complete() || n <= 3)
                CHECK(chi_star_list(g, 4).value == naive_list_packing_number(g));
        }
}

TEST_CASE("sandwich up to 5 vertices")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto &g : all_graphs(n)) {
            auto cl = chi_list(g, 5);
            REQUIRE(cl.value);
            CHECK(naive_chromatic_number(g) <= *cl.value);
            CHECK(*cl.value <= degeneracy(g) + 1);
            // packing sweeps at k = 4 on five vertices are out of desk range
            auto cs = chi_star_list(g, n <= 4 ? 4 : 3);
            if (cs.value)
                CHECK(*cl.value <= *cs.value);
        }
}

TEST_CASE("list packing number at most max degree + 1 where decidable")
{
    // Only n <= 4 is decided in full; on five vertices graphs whose number is
    // at most 3 are confirmed and the rest are left open.
    for (int n = 1; n <= 5; ++n)
        for (const auto &g : all_graphs(n)) {
            auto cs = chi_star_list(g, n <= 4 ? 4 : 3);
            if (n <= 4)
                REQUIRE(cs.value);
            if (cs.value)
                CHECK(*cs.value <= g.max_degree() + 1);
            else
                CHECK(g.max_degree() + 1 >= 4);
        }
}

TEST_CASE("verdicts survive color renaming")
{
    std::mt19937_64 rng(11);
    auto c4 = chi_star_list(cycle_graph(4), 4);
    REQUIRE(c4.witness);
    auto k33 = lists_of({{0, 1}, {0, 2}, {1, 2}, {0, 1}, {0, 2}, {1, 2}});
    for (int trial = 0; trial < 50; ++trial) {
        CHECK_FALSE(find_packing(cycle_graph(4), renamed(*c4.witness, rng), 2));
        CHECK_FALSE(find_list_coloring(complete_bipartite_graph(3, 3), renamed(k33, rng)));
    }
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(6, 0.5, rng());
        auto l = random_lists(6, 3, 5, rng);
        for (int t = 1; t <= 3; ++t) {
            auto before = find_packing(g, l, t);
            auto after_lists = renamed(l, rng);
            auto after = find_packing(g, after_lists, t);
            CHECK(before.has_value() == after.has_value());
            if (before)
                CHECK(verify_packing(g, l, *before));
            if (after)
                CHECK(verify_packing(g, after_lists, *after));
            if (trial < 60)
                CHECK(before.has_value() == naive_packable(g, to_raw(l), t));
        }
    }
}

TEST_CASE("parallel sweep reproduces the serial sweep")
{
    for (const auto &g : {cycle_graph(4), cycle_graph(5), complete_graph(3), path_graph(5), complete_bipartite_graph(2, 3)})
        for (int k = 1; k <= 3; ++k)
            for (int t : {1, k}) {
                auto serial = sweep_assignments(g, k, t, 1);
                auto parallel = sweep_assignments(g, k, t, 4);
                CHECK(serial.all_packable == parallel.all_packable);
                CHECK(serial.witness == parallel.witness);
                CHECK(serial.assignments_checked == parallel.assignments_checked);
            }
}

TEST_CASE("canonical assignment counts")
{
    // no early exit on the empty graph: every canonical assignment is visited
    CHECK(sweep_assignments(Graph(3), 3, 1).assignments_checked == 173);
    CHECK(sweep_assignments(Graph(4), 2, 1).assignments_checked == 321);
}
