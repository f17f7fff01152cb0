#include "gwb/workbench/scan.hpp"

#include "gwb/graph6.hpp"
#include "gwb/workbench/filter.hpp"
#include "gwb/xp.hpp"

#include <chrono>
#include <istream>
#include <ostream>

#include <omp.h>

namespace gwb::workbench
{
    namespace
    {
        struct Slot
        {
            std::size_t index = 0;
            std::string g6;
            Graph graph;
            bool selected = false;
            TaskOutcome outcome;
            std::int64_t ms = 0;
        };

        auto trim(std::string line) -> std::string
        {
            while (! line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
                line.pop_back();
            return line;
        }

        void emit(std::ostream &out, const std::string &task, std::size_t index, const std::string &g6,
            const TaskOutcome &o, std::optional<std::int64_t> ms)
        {
            Json row;
            row["i"] = index;
            row["g6"] = g6;
            row["task"] = task;
            row["verdict"] = o.verdict;
            row["cert"] = o.cert;
            row["ms"] = ms ? Json(*ms) : Json(nullptr);
            out << row.dump() << '\n';
        }

        void record(ScanSummary &s, std::size_t index, const std::string &g6, const TaskOutcome &o)
        {
            ++s.solved;
            ++s.counts[o.label];
            if (o.error)
                ++s.errors;
            if (! o.certificate_ok) {
                ++s.certificate_failures;
                s.findings.push_back({index, g6, "certificate failed re-verification"});
            }
            if (o.finding)
                s.findings.push_back({index, g6, *o.finding});
        }
    }

    ScanAbort::ScanAbort(const DecodeFailure &failure) :
        std::runtime_error("line " + std::to_string(failure.line) + ": " + failure.message),
        failure_(failure)
    {
    }

    auto ScanSummary::exit_code() const -> int
    {
        if (certificate_failures > 0 || errors > 0)
            return 1;
        return findings.empty() ? 0 : 10;
    }

    auto ScanSummary::to_json() const -> Json
    {
        Json j;
        Json c = Json::object();
        for (const auto &[label, count] : counts)
            c[label] = count;
        Json f = Json::array();
        for (const auto &x : findings)
            f.push_back({{"i", x.index}, {"g6", x.g6}, {"finding", x.message}});
        Json d = Json::array();
        for (const auto &x : decode_errors)
            d.push_back({{"line", x.line}, {"offset", x.offset}, {"error", x.message}});
        j["summary"] = {{"graphs", graphs}, {"filtered_out", filtered_out}, {"solved", solved}, {"errors", errors},
            {"certificate_failures", certificate_failures}, {"counts", c}, {"findings", f}, {"decode_errors", d}};
        return j;
    }

    auto run_scan(std::istream &in, std::ostream &out, const ScanTask &task, const ScanOptions &options) -> ScanSummary
    {
        validate_task(task);
        if (task.name == "xp")
            return run_xp_scan(out, task, options);
        const auto keep = compile_filter(task.filter);
        const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();
        const std::size_t chunk = std::max<std::size_t>(options.chunk, 1);

        ScanSummary summary;
        std::size_t line_no = 0;
        std::size_t graph_index = 0;
        std::size_t taken = 0;
        auto window_full = [&] { return options.limit && taken >= *options.limit; };

        std::string line;
        std::vector<Slot> batch;
        bool eof = false;
        while (! eof && ! window_full()) {
            batch.clear();
            while (batch.size() < chunk && ! window_full()) {
                if (! std::getline(in, line)) {
                    eof = true;
                    break;
                }
                ++line_no;
                line = trim(line);
                if (line.empty() || line == ">>graph6<<")
                    continue;
                const std::size_t index = graph_index++;
                if (index < options.skip)
                    continue;
                ++taken;
                Slot slot;
                slot.index = index;
                try {
                    slot.graph = decode_graph6(line);
                }
                catch (const Graph6Error &e) {
                    DecodeFailure failure{line_no, e.offset(), e.what()};
                    if (options.strict)
                        throw ScanAbort(failure);
                    summary.decode_errors.push_back(failure);
                    continue;
                }
                slot.g6 = encode_graph6(slot.graph);
                batch.push_back(std::move(slot));
            }

            const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
            for (std::int64_t b = 0; b < count; ++b) {
                auto &slot = batch[b];
                slot.selected = keep(slot.graph);
                if (! slot.selected)
                    continue;
                const auto start = std::chrono::steady_clock::now();
                slot.outcome = evaluate_task(task, slot.graph);
                const auto stop = std::chrono::steady_clock::now();
                slot.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
            }

            for (const auto &slot : batch) {
                ++summary.graphs;
                if (! slot.selected) {
                    ++summary.filtered_out;
                    continue;
                }
                emit(out, task.name, slot.index, slot.g6, slot.outcome,
                    options.timing ? std::optional<std::int64_t>(slot.ms) : std::nullopt);
                record(summary, slot.index, slot.g6, slot.outcome);
            }
        }
        out << summary.to_json().dump() << '\n';
        return summary;
    }

    auto run_xp_scan(std::ostream &out, const ScanTask &task, const ScanOptions &options) -> ScanSummary
    {
        const auto &o = task.options;
        const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();
        const auto start = std::chrono::steady_clock::now();
        const auto scan = scan_conjecture(o.xp_k, o.xp_max_k, jobs);
        const auto stop = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

        ScanSummary summary;
        const std::size_t first = std::min(options.skip, scan.records.size());
        std::size_t last = scan.records.size();
        if (options.limit)
            last = std::min(last, first + *options.limit);
        for (std::size_t i = first; i < last; ++i) {
            const auto &r = scan.records[i];
            XpParams p{o.xp_k, r.distances};
            const auto g = build_xp(p);
            TaskOutcome outcome;
            outcome.verdict = {{"k", o.xp_k}, {"S", r.distances}, {"chromatic_index", r.verdict.chromatic_index},
                {"class", r.verdict.class_label}, {"petersen", r.petersen_isomorphic}};
            outcome.cert = format_edge_coloring(r.verdict.certificate);
            outcome.label = "class" + std::to_string(r.verdict.class_label);
            outcome.certificate_ok = verify_edge_coloring(g, r.verdict.certificate)
                && r.verdict.certificate.colors == r.verdict.chromatic_index;
            if (r.verdict.class_label == 2 && ! r.petersen_isomorphic)
                outcome.finding = "Class 2 XP graph not isomorphic to the Petersen graph";
            ++summary.graphs;
            const auto g6 = encode_graph6(g);
            emit(out, task.name, i, g6, outcome, options.timing ? std::optional<std::int64_t>(ms) : std::nullopt);
            record(summary, i, g6, outcome);
        }
        out << summary.to_json().dump() << '\n';
        return summary;
    }
}
