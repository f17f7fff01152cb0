#include "gwb/generators.hpp"
#include "gwb/graph6.hpp"
#include "gwb/list_pack.hpp"
#include "gwb/rainbow.hpp"
#include "gwb/workbench/scan.hpp"
#include "gwb/xp.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

using namespace gwb;

namespace
{
    auto random_corpus(int count, int n, double p) -> std::vector<Graph>
    {
        std::mt19937_64 rng(12345);
        std::bernoulli_distribution coin(p);
        std::vector<Graph> out;
        for (int i = 0; i < count; ++i) {
            GraphBuilder b(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng))
                        b.add_edge(u, v);
            out.push_back(b.build());
        }
        return out;
    }

    auto corpus_text() -> const std::string &
    {
        static const std::string text = [] {
            std::string t;
            for (const auto &g : random_corpus(400, 9, 0.5))
                t += encode_graph6(g) + "\n";
            return t;
        }();
        return text;
    }

    // Arg 0 is the job count; jobs = 1 runs the serial reference path.
    void sweep_k33(benchmark::State &state)
    {
        const auto g = complete_bipartite_graph(3, 3);
        for (auto _ : state)
            benchmark::DoNotOptimize(sweep_assignments(g, 2, 1, static_cast<int>(state.range(0))));
    }

    void sweep_c5_pack(benchmark::State &state)
    {
        const auto g = cycle_graph(5);
        for (auto _ : state)
            benchmark::DoNotOptimize(sweep_assignments(g, 3, 2, static_cast<int>(state.range(0))));
    }

    void scan_chromatic_index(benchmark::State &state)
    {
        workbench::ScanTask task;
        task.name = "chromatic-index";
        workbench::ScanOptions options;
        options.jobs = static_cast<int>(state.range(0));
        for (auto _ : state) {
            std::istringstream in(corpus_text());
            std::ostringstream out;
            benchmark::DoNotOptimize(workbench::run_scan(in, out, task, options));
        }
    }

    void mindeg(benchmark::State &state)
    {
        static const auto corpus = random_corpus(200, 9, 0.75);
        for (auto _ : state)
            benchmark::DoNotOptimize(mindeg_scan(corpus, parse_rational("0"), static_cast<int>(state.range(0))));
    }

    void xp_scan(benchmark::State &state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(scan_conjecture(2, xp_default_max_k, static_cast<int>(state.range(0))));
    }
}

BENCHMARK(sweep_k33)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_c5_pack)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_chromatic_index)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(mindeg)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(xp_scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
