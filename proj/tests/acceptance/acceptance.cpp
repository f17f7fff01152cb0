#include "corpus.hpp"
#include "oracles.hpp"

#include "gwb/crumby.hpp"
#include "gwb/edge_color.hpp"
#include "gwb/generators.hpp"
#include "gwb/graph6.hpp"
#include "gwb/isomorphism.hpp"
#include "gwb/list_pack.hpp"
#include "gwb/matching.hpp"
#include "gwb/order_types.hpp"
#include "gwb/properties.hpp"
#include "gwb/rainbow.hpp"
#include "gwb/workbench/scan.hpp"
#include "gwb/xp.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gwb;
using namespace gwb::test;

namespace
{
    // Collects the first few mismatches of a criterion; an empty log is a pass.
    class Log
    {
    public:
        void fail(const std::string &what)
        {
            if (count_++ < 5)
                lines_.push_back(what);
        }

        void expect(bool ok, const std::string &what)
        {
            if (! ok)
                fail(what);
        }

        void note(const std::string &what) { notes_.push_back(what); }

        auto ok() const -> bool { return count_ == 0; }
        auto lines() const -> const std::vector<std::string> & { return lines_; }
        auto notes() const -> const std::vector<std::string> & { return notes_; }
        auto count() const -> int { return count_; }

    private:
        int count_ = 0;
        std::vector<std::string> lines_;
        std::vector<std::string> notes_;
    };

    struct Criterion
    {
        int id;
        std::string title;
        std::chrono::milliseconds limit;
        std::function<void(Log &)> body;
    };

    auto g6(const Graph &g) -> std::string
    {
        return encode_graph6(g);
    }

    // Own check of an edge coloring: every edge once, colors in 1..k, proper.
    auto proper_edge_coloring(const Graph &g, const EdgeColoring &col, int k) -> bool
    {
        std::set<Edge> seen;
        std::vector<std::set<int>> at(g.order());
        for (const auto &e : col.entries) {
            if (e.color < 1 || e.color > k || ! g.adjacent(e.u, e.v))
                return false;
            if (! seen.insert(make_edge(e.u, e.v)).second)
                return false;
            if (! at[e.u].insert(e.color).second || ! at[e.v].insert(e.color).second)
                return false;
        }
        return static_cast<int>(seen.size()) == g.size();
    }

    // Own check of a packing: t colorings from the lists, each proper, pairwise
    // different at every vertex.
    auto proper_packing(const Graph &g, const ListAssignment &lists, const Packing &p, int t) -> bool
    {
        if (static_cast<int>(p.colorings.size()) != t)
            return false;
        for (const auto &c : p.colorings) {
            if (static_cast<int>(c.size()) != g.order())
                return false;
            for (int v = 0; v < g.order(); ++v)
                if (c[v] < 0 || c[v] >= 64 || ! ((lists.lists[v] >> c[v]) & 1U))
                    return false;
            for (auto [u, v] : g.edges())
                if (c[u] == c[v])
                    return false;
        }
        for (int v = 0; v < g.order(); ++v) {
            std::set<int> used;
            for (const auto &c : p.colorings)
                if (! used.insert(c[v]).second)
                    return false;
        }
        return true;
    }

    auto edge_colors_in_order(const Graph &g, const EdgeColoring &col) -> std::vector<int>
    {
        auto table = g.edge_index_table();
        std::vector<int> colors(g.size(), 0);
        for (const auto &e : col.entries)
            colors[table[e.u * g.order() + e.v]] = e.color;
        return colors;
    }

    void subdivisions(Log &log)
    {
        const std::vector<std::pair<std::string, Graph>> bases{
            {"K4", complete_graph(4)}, {"K3,3", complete_bipartite_graph(3, 3)}, {"prism", prism_graph(3)}};
        for (const auto &[name, g] : bases) {
            auto base = chromatic_index(g);
            log.expect(base.chromatic_index == 3 && base.class_label == 1, name + " is not Class 1");
            log.expect(proper_edge_coloring(g, base.certificate, 3), name + " certificate rejected");
            for (auto [u, v] : g.edges()) {
                auto h = subdivide_edge(g, u, v);
                auto verdict = chromatic_index(h);
                const auto where = name + " subdivided at " + to_string(Edge{u, v});
                log.expect(is_overfull(h), where + " is not overfull");
                log.expect(verdict.chromatic_index == 4, where + " has chromatic index " + std::to_string(verdict.chromatic_index));
                log.expect(proper_edge_coloring(h, verdict.certificate, 4), where + " certificate rejected");
                log.expect(! find_edge_coloring(h, 3), where + " is 3-edge-colorable");
            }
        }
    }

    void xp_graphs(Log &log)
    {
        auto small = scan_conjecture(1);
        log.expect(small.records.size() == 2, "expected two sets for ring size 5");
        for (const auto &r : small.records) {
            auto g = build_xp({1, r.distances});
            auto iso = are_isomorphic(g, petersen_graph());
            log.expect(iso.isomorphic && verify_isomorphism(g, petersen_graph(), iso.witness),
                       "XP(10,{" + std::to_string(r.distances[0]) + "}) is not the Petersen graph");
            log.expect(r.verdict.class_label == 2 && r.verdict.chromatic_index == 4, "XP(10) set is not Class 2");
        }

        auto large = scan_conjecture(2);
        log.expect(large.records.size() == 6, "expected six sets for ring size 9");
        for (const auto &r : large.records) {
            auto g = build_xp({2, r.distances});
            log.expect(g.order() == 18 && g.max_degree() == 5 && g.min_degree() == 5, "XP(18) is not 5-regular on 18 vertices");
            log.expect(r.verdict.class_label == 1 && r.verdict.chromatic_index == 5, "an XP(18) graph is Class 2");
            log.expect(proper_edge_coloring(g, r.verdict.certificate, 5), "XP(18) certificate rejected");
        }
        log.expect(small.conjecture_consistent && large.conjecture_consistent, "scan reports an inconsistency");
    }

    void matchings(Log &log)
    {
        const auto pet = petersen_graph();
        auto all = perfect_matchings(pet);
        log.expect(all.matchings.size() == 6 && ! all.truncated, "Petersen does not have 6 perfect matchings");
        log.expect(naive_perfect_matchings(pet).size() == 6, "oracle disagrees on the Petersen count");
        for (const auto &m : all.matchings)
            log.expect(is_perfect_matching(pet, m), "emitted matching is not perfect");
        log.expect(is_poorly_matchable(pet).poorly_matchable, "Petersen is not poorly matchable");
        log.expect(is_r_graph(pet, 3).is_r_graph && naive_is_r_graph(pet, 3), "Petersen is not a 3-graph");

        for (const auto &[name, g] : std::vector<std::pair<std::string, Graph>>{{"K4", complete_graph(4)}, {"C6", cycle_graph(6)}}) {
            auto pair = has_two_disjoint_pms(g);
            log.expect(pair.has_pair && pair.witness, name + " lacks two disjoint perfect matchings");
            if (pair.witness) {
                auto [a, b] = *pair.witness;
                log.expect(is_perfect_matching(g, a) && is_perfect_matching(g, b) && edge_disjoint(a, b),
                           name + " witness rejected");
            }
        }
    }

    void gimbel(Log &log)
    {
        int checked = 0;
        for (int n = 1; n <= 8; ++n) {
            const double threshold = n / 2.0 + std::log2(static_cast<double>(n)) - 1.0;
            for (const auto &g : all_graphs(n)) {
                if (g.is_complete() || ! is_connected(g) || g.min_degree() < threshold - 1e-9)
                    continue;
                ++checked;
                auto verdict = rainbow_connection_number(g);
                log.expect(verdict.status == RcVerdict::Status::exact && verdict.rc == 2, "rc != 2 for " + g6(g));
                log.expect(naive_rainbow_connected(g, edge_colors_in_order(g, verdict.certificate)),
                           "rainbow certificate rejected for " + g6(g));
                log.expect(diameter(g) == 2, "diameter is not 2 for " + g6(g));
            }
        }
        log.note(std::to_string(checked) + " graphs meet the bound");
    }

    void vizing(Log &log)
    {
        int count = 0, class2 = 0;
        for (int n = 1; n <= 7; ++n)
            for (const auto &g : all_graphs(n)) {
                ++count;
                auto verdict = chromatic_index(g);
                const int d = g.max_degree();
                log.expect(verdict.chromatic_index == d || verdict.chromatic_index == d + 1, "outside the window: " + g6(g));
                log.expect(proper_edge_coloring(g, verdict.certificate, verdict.chromatic_index), "certificate rejected: " + g6(g));
                if (verdict.chromatic_index > 0)
                    log.expect(! find_edge_coloring(g, verdict.chromatic_index - 1), "not minimal: " + g6(g));
                if (is_overfull(g))
                    log.expect(verdict.class_label == 2, "overfull but Class 1: " + g6(g));
                if (n <= 5)
                    log.expect(naive_chromatic_index(g) == verdict.chromatic_index, "oracle disagrees: " + g6(g));
                class2 += verdict.class_label == 2;
            }
        log.expect(count == 1 + 2 + 4 + 11 + 34 + 156 + 1044, "corpus has " + std::to_string(count) + " graphs");
        log.note(std::to_string(count) + " graphs, " + std::to_string(class2) + " Class 2");
    }

    void list_packing(Log &log)
    {
        auto packings_verified = [&](const std::string &name, const Graph &g, const ListAssignment &lists, int t) {
            auto p = find_packing(g, lists, t);
            log.expect(p.has_value(), name + ": no packing where one is expected");
            if (p)
                log.expect(verify_packing(g, lists, *p) && proper_packing(g, lists, *p, t), name + ": packing rejected");
        };
        auto full = [](const Graph &g, int k) { return ListAssignment::uniform(g.order(), (ColorSet{1} << k) - 1); };

        struct Expect
        {
            std::string name;
            Graph g;
            int value;
        };

        for (const auto &[name, g, value] : {Expect{"C4", cycle_graph(4), 2}, Expect{"K3,3", complete_bipartite_graph(3, 3), 3},
                                             Expect{"K4", complete_graph(4), 4}}) {
            auto got = chi_list(g, 4);
            log.expect(got.value == value, "chi_list(" + name + ") = " + (got.value ? std::to_string(*got.value) : "?")
                                               + ", expected " + std::to_string(value));
            if (got.witness) {
                log.expect(! find_list_coloring(g, *got.witness), name + ": witness lists are colorable");
            }
            auto coloring = find_list_coloring(g, full(g, value));
            log.expect(coloring.has_value(), name + ": no coloring from " + std::to_string(value) + " colors");
        }

        for (const auto &[name, g, value] : {Expect{"K2", complete_graph(2), 2}, Expect{"C4", cycle_graph(4), 2},
                                             Expect{"K3", complete_graph(3), 3}}) {
            auto got = chi_star_list(g, 4);
            const std::string actual = got.value ? std::to_string(*got.value) : "?";
            log.expect(got.value == value, "chi_star_list(" + name + ") = " + actual + ", expected " + std::to_string(value));
            if (got.value) {
                log.expect(naive_list_packing_number(g) == *got.value, name + ": oracle disagrees with " + actual);
                packings_verified(name, g, full(g, *got.value), *got.value);
            }
            if (got.witness) {
                const int k = got.value ? *got.value - 1 : got.lower_bound - 1;
                log.expect(! find_packing(g, *got.witness, k), name + ": witness lists admit a packing");
                std::string lists;
                for (auto l : got.witness->lists)
                    lists += (lists.empty() ? "" : " ") + format_color_set(l);
                log.note(name + ": lists " + lists + " admit no " + std::to_string(k) + "-packing");
            }
        }

        // every packable 2- and 3-assignment of C4 gets a verified packing
        auto c4 = cycle_graph(4);
        for (int k : {2, 3}) {
            int packed = 0;
            std::function<void(ListAssignment &, int)> walk = [&](ListAssignment &l, int v) {
                if (v == c4.order()) {
                    if (auto p = find_packing(c4, l, k)) {
                        ++packed;
                        log.expect(verify_packing(c4, l, *p) && proper_packing(c4, l, *p, k), "C4 packing rejected");
                    }
                    return;
                }
                for (ColorSet s = 0; s < (ColorSet{1} << (k + 1)); ++s)
                    if (popcount(s) == k) {
                        l.lists[v] = s;
                        walk(l, v + 1);
                    }
            };
            ListAssignment l{std::vector<ColorSet>(c4.order(), 0)};
            walk(l, 0);
            log.expect(packed > 0, "no packable assignment found");
        }
    }

    void crumby(Log &log)
    {
        int graphs = 0;
        for (int n = 4; n <= 10; n += 2)
            for (const auto &g : connected_cubic_graphs(n)) {
                if (vertex_connectivity(g) < 3)
                    continue;
                ++graphs;
                for (int path : {2, 3})
                    for (int blue : {1, 2})
                        for (int red : {1, 2}) {
                            CrumbyParams params{blue, red, path};
                            auto found = find_crumby(g, params);
                            const bool expected = naive_crumby_exists(g, blue, red, path);
                            log.expect(found.has_value() == expected, "verdict differs on " + g6(g));
                            if (found)
                                log.expect(check_crumby(g, *found, params).ok, "witness rejected on " + g6(g));
                        }
            }
        log.note(std::to_string(graphs) + " 3-connected cubic graphs");
    }

    void orders(Log &log)
    {
        for (int n = 1; n <= 6; ++n)
            for (const auto &g : all_graphs(n))
                for (auto type : {OrderType::A, OrderType::B}) {
                    auto found = find_order(g, type);
                    log.expect(found.has_value() == naive_order_exists(g, type == OrderType::B),
                               std::string("type ") + to_string(type) + " differs on " + g6(g));
                    if (found)
                        log.expect(verify_order(g, *found, type).ok, "order rejected on " + g6(g));
                }

        for (const auto &[name, g] : std::vector<std::pair<std::string, Graph>>{{"K3", complete_graph(3)}, {"C4", cycle_graph(4)}}) {
            log.expect(! find_order(g, OrderType::A), name + " has a Type-A order");
            auto b = find_order(g, OrderType::B);
            log.expect(b && verify_order(g, *b, OrderType::B).ok, name + " lacks a Type-B order");
        }

        std::vector<double> ratio;
        for (int n : {8, 16, 32}) {
            auto p = path_graph(n);
            Ordering identity(n);
            for (int i = 0; i < n; ++i)
                identity[i] = i;
            OrderStats stats;
            log.expect(verify_order(p, identity, OrderType::A, &stats).ok, "path order rejected");
            ratio.push_back(static_cast<double>(stats.steps) / (n + p.size()));
            log.note("P" + std::to_string(n) + ": " + std::to_string(stats.steps) + " steps");
        }
        for (double r : ratio)
            log.expect(std::abs(r - ratio.front()) < 0.25, "step count is not linear in n + m");
    }

    auto scan_text(const std::string &input, int jobs, const std::string &task) -> std::string
    {
        workbench::ScanTask t;
        t.name = task;
        workbench::ScanOptions options;
        options.jobs = jobs;
        std::istringstream in(input);
        std::ostringstream out;
        workbench::run_scan(in, out, t, options);
        return out.str();
    }

    void infrastructure(Log &log)
    {
        std::string corpus;
        int count = 0;
        for (int n = 0; n <= 7; ++n) {
            const auto &graphs = n == 0 ? std::vector<Graph>{Graph(0)} : all_graphs(n);
            for (const auto &g : graphs) {
                ++count;
                auto text = encode_graph6(g);
                log.expect(decode_graph6(text) == g, "round trip failed for " + text);
                log.expect(encode_graph6(decode_graph6(text)) == text, "re-encoding differs for " + text);
                if (n > 0)
                    corpus += text + "\n";
            }
        }
        for (const auto &g : labeled_graphs(5))
            log.expect(decode_graph6(encode_graph6(g)) == g, "labeled round trip failed");

        for (const auto &task : {"chromatic-index", "props", "crumby"}) {
            auto a = scan_text(corpus, 1, task);
            auto b = scan_text(corpus, 4, task);
            log.expect(a == b, std::string("jobs 1 and 4 differ for ") + task);
        }
        log.note(std::to_string(count) + " graphs");
    }
}

int main()
{
    using namespace std::chrono_literals;
    const std::vector<Criterion> criteria{
        {1, "subdivided K4, K3,3 and prism are overfull with chromatic index 4", 1s, subdivisions},
        {2, "XP(10,S) is Petersen and Class 2; all six XP(18,S) are Class 1", 60s, xp_graphs},
        {3, "Petersen matchings; disjoint pairs in K4 and C6", 1s, matchings},
        {4, "min degree n/2 + log2(n) - 1 gives rc = 2 for n <= 8", 600s, gimbel},
        {5, "Vizing window and overfull graphs on <= 7 vertices", 120s, vizing},
        {6, "list coloring and list packing ground truths", 300s, list_packing},
        {7, "crumby solver agrees with the subset oracle on 3-connected cubic graphs", 120s, crumby},
        {8, "order search agrees with the permutation oracle; linear verification", 120s, orders},
        {9, "graph6 round trips and job-independent scans", 120s, infrastructure},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        Log log;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(log);
        }
        catch (const std::exception &e) {
            log.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        if (ms > c.limit)
            log.fail("took " + std::to_string(ms.count()) + " ms");

        const bool pass = log.ok();
        failed += ! pass;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << ms.count() << " ms, limit "
                  << c.limit.count() << " ms)\n";
        for (const auto &n : log.notes())
            std::cout << "       " << n << "\n";
        for (const auto &l : log.lines())
            std::cout << "       ! " << l << "\n";
        if (log.count() > static_cast<int>(log.lines().size()))
            std::cout << "       ! ... " << log.count() - log.lines().size() << " more\n";
        std::cout.flush();
    }
    std::cout << (failed ? std::to_string(failed) + " of " : "all ") << criteria.size() << " criteria"
              << (failed ? " failed" : " passed") << "\n";
    return failed ? 1 : 0;
}
