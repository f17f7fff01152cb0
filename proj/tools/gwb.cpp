// gwb: command-line front end. Per-graph commands read graph6 lines from
// stdin (or --in) and write JSONL rows followed by a summary object.

#include "gwb/generators.hpp"
#include "gwb/graph6.hpp"
#include "gwb/workbench/filter.hpp"
#include "gwb/workbench/scan.hpp"
#include "gwb/xp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gwb;
using namespace gwb::workbench;

namespace
{
    struct StreamArgs
    {
        std::string in;
        ScanOptions scan;
        std::size_t limit = 0;
        bool has_limit = false;
    };

    struct TaskArgs
    {
        ScanTask task;
        std::string lists;
        std::string order_type = "A";
        std::string ordering;
        std::string offset = "0";
    };

    void add_stream_options(CLI::App *cmd, StreamArgs &s, TaskArgs &t)
    {
        cmd->add_option("--in", s.in, "graph6 file (default: standard input)");
        cmd->add_option("--filter", t.task.filter, "graph class filter, e.g. 'cubic & connected(3)'");
        cmd->add_option("--jobs", s.scan.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
        cmd->add_option("--skip", s.scan.skip, "graph lines to skip first");
        cmd->add_option("--limit", s.limit, "graph lines to process")->each([&](const std::string &) { s.has_limit = true; });
        cmd->add_flag("--strict", s.scan.strict, "abort on the first undecodable line");
        cmd->add_flag("--timing", s.scan.timing, "report elapsed milliseconds per row");
    }

    void add_crumby_options(CLI::App *cmd, TaskArgs &t)
    {
        auto &p = t.task.options.crumby;
        cmd->add_option("--max-blue-deg", p.max_blue_degree, "maximum degree inside B");
        cmd->add_option("--min-red-deg", p.min_red_degree, "minimum degree inside R");
        cmd->add_option("--path-len", p.forbidden_red_path_edges, "edges of the path R must not contain");
    }

    void add_listpack_options(CLI::App *cmd, TaskArgs &t)
    {
        auto &o = t.task.options;
        cmd->add_option("--k", o.k, "list size for color/pack sweeps");
        cmd->add_option("--t", o.t, "number of disjoint colorings for pack (default k)");
        cmd->add_option("--kmax", o.kmax, "largest list size tried by chi/chi-star/gap");
        cmd->add_option("--lists", t.lists, "explicit lists, e.g. '0,1;1,2;0,2'");
        cmd->add_option("--max-order", o.limits.max_order, "refuse graphs with more vertices");
        cmd->add_option("--max-k", o.limits.max_k, "refuse list sizes above this");
    }

    void add_rc_options(CLI::App *cmd, TaskArgs &t)
    {
        cmd->add_option("--cap", t.task.options.cap, "largest number of colors tried (default n-1)");
        cmd->add_option("--offset", t.offset, "c in the hypothesis delta >= n/2 + c (p, p/q or decimal)");
    }

    void add_matching_options(CLI::App *cmd, TaskArgs &t)
    {
        cmd->add_option("--r", t.task.options.r, "r for rgraph");
        cmd->add_option("--pm-cap", t.task.options.matching_cap, "stop enumerating perfect matchings here");
    }

    void add_order_options(CLI::App *cmd, TaskArgs &t)
    {
        cmd->add_option("--type", t.order_type, "A or B")->check(CLI::IsMember({"A", "B"}));
        cmd->add_option("--order", t.ordering, "vertex order for verify, e.g. '0 2 1 3'");
    }

    void add_xp_options(CLI::App *cmd, TaskArgs &t)
    {
        cmd->add_option("--k", t.task.options.xp_k, "ring size is 4k+1");
        cmd->add_option("--max-k", t.task.options.xp_max_k, "refuse k above this");
    }

    void finish(TaskArgs &t)
    {
        auto &o = t.task.options;
        if (! t.lists.empty())
            o.lists = parse_list_text(t.lists);
        o.order_type = t.order_type == "B" ? OrderType::B : OrderType::A;
        if (! t.ordering.empty())
            o.ordering = parse_ordering(t.ordering);
        o.offset = parse_rational(t.offset);
    }

    auto run_stream(StreamArgs &s, TaskArgs &t) -> int
    {
        finish(t);
        if (s.has_limit)
            s.scan.limit = s.limit;
        ScanSummary summary;
        if (t.task.name == "xp")
            summary = run_scan(std::cin, std::cout, t.task, s.scan);
        else if (s.in.empty())
            summary = run_scan(std::cin, std::cout, t.task, s.scan);
        else {
            std::ifstream file(s.in);
            if (! file)
                throw InputError("cannot open " + s.in);
            summary = run_scan(file, std::cout, t.task, s.scan);
        }
        for (const auto &d : summary.decode_errors)
            std::cerr << "line " << d.line << ": " << d.message << '\n';
        return summary.exit_code();
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Exact checkers and search for small graphs"};
    app.require_subcommand(1);

    StreamArgs stream;
    TaskArgs args;

    std::string family;
    std::vector<int> params;
    auto *gen = app.add_subcommand("gen", "print a named graph as graph6");
    gen->add_option("family", family, "one of the generator families")->required();
    gen->add_option("params", params, "integer parameters");

    auto add_task = [&](const std::string &name, const std::string &help) {
        auto *cmd = app.add_subcommand(name, help);
        add_stream_options(cmd, stream, args);
        cmd->callback([&args, name] { args.task.name = name; });
        return cmd;
    };

    add_task("props", "basic invariants");
    add_task("chromatic-index", "chromatic index with an optimal edge coloring");
    add_crumby_options(add_task("crumby", "search for a crumby bipartition"), args);

    auto with_mode = [&](CLI::App *cmd, std::vector<std::string> modes) {
        cmd->add_option("mode", args.task.options.mode, "sub-mode")->required()->check(CLI::IsMember(modes));
        return cmd;
    };
    add_listpack_options(with_mode(add_task("listpack", "list coloring and list packing"), {"color", "pack", "chi", "chi-star", "gap"}), args);
    add_rc_options(add_task("rc", "rainbow connection number"), args);
    add_matching_options(with_mode(add_task("matchings", "perfect matching questions"), {"enum", "poor", "rgraph", "disjoint"}), args);
    add_order_options(with_mode(add_task("order", "Type A / Type B vertex orders"), {"verify", "find"}), args);

    std::string xp_mode;
    std::vector<int> xp_s;
    auto *xp = app.add_subcommand("xp", "extended Petersen graphs");
    xp->add_option("mode", xp_mode, "build or scan")->required()->check(CLI::IsMember({"build", "scan"}));
    xp->add_option("--s", xp_s, "distance set for build")->delimiter(',');
    add_xp_options(xp, args);
    xp->add_option("--jobs", stream.scan.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    xp->add_flag("--timing", stream.scan.timing, "report elapsed milliseconds");

    auto *scan = app.add_subcommand("scan", "run any task over a graph6 corpus");
    scan->add_option("--task", args.task.name, "task name")->required();
    scan->add_option("--mode", args.task.options.mode, "task sub-mode");
    add_stream_options(scan, stream, args);
    add_crumby_options(scan, args);
    add_listpack_options(scan, args);
    add_rc_options(scan, args);
    add_matching_options(scan, args);
    add_order_options(scan, args);
    scan->add_option("--xp-k", args.task.options.xp_k, "ring size 4k+1 for the xp task");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        // --help is a ParseError too; keep its zero exit
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            std::cout << encode_graph6(generate(family, params)) << '\n';
            return 0;
        }
        if (xp->parsed()) {
            args.task.name = "xp";
            if (xp_mode == "build") {
                XpParams p{args.task.options.xp_k, xp_s};
                std::cout << encode_graph6(build_xp(p)) << '\n';
                return 0;
            }
            return run_stream(stream, args);
        }
        return run_stream(stream, args);
    }
    catch (const std::exception &e) {
        std::cerr << "gwb: " << e.what() << '\n';
    }
    return 1;
}
