#pragma once

#include "gwb/workbench/task.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwb::workbench
{
    struct ScanOptions
    {
        /// Worker threads; 1 evaluates in the calling thread.
        int jobs = 1;
        /// Graph lines to pass over before the window starts.
        std::size_t skip = 0;
        std::optional<std::size_t> limit;
        /// Abort at the first undecodable line instead of reporting it.
        bool strict = false;
        /// Fill "ms" with elapsed wall time. Off by default so reports are reproducible.
        bool timing = false;
        /// Graphs read per parallel batch.
        std::size_t chunk = 256;
    };

    struct DecodeFailure
    {
        std::size_t line = 0;
        std::size_t offset = 0;
        std::string message;
    };

    struct ScanFinding
    {
        std::size_t index = 0;
        std::string g6;
        std::string message;
    };

    struct ScanSummary
    {
        std::size_t graphs = 0;
        std::size_t filtered_out = 0;
        std::size_t solved = 0;
        std::size_t errors = 0;
        std::size_t certificate_failures = 0;
        std::map<std::string, std::size_t> counts;
        std::vector<ScanFinding> findings;
        std::vector<DecodeFailure> decode_errors;

        /// 1 for certificate failures or solver errors, 10 for findings, else 0.
        auto exit_code() const -> int;
        auto to_json() const -> Json;
    };

    /// Thrown in strict mode at the first undecodable line.
    class ScanAbort : public std::runtime_error
    {
    public:
        ScanAbort(const DecodeFailure &failure);
        auto failure() const -> const DecodeFailure & { return failure_; }

    private:
        DecodeFailure failure_;
    };

    /// Streams graph6 lines from in, writes one JSON row per solved graph and then
    /// the summary object to out. Row "i" is the 0-based index of the graph line
    /// in the input (blank and header lines are not counted), so windows of the
    /// same file line up. Rows keep input order for any number of jobs.
    auto run_scan(std::istream &in, std::ostream &out, const ScanTask &task, const ScanOptions &options) -> ScanSummary;

    /// The xp task has no graph input: one row per distance set S.
    auto run_xp_scan(std::ostream &out, const ScanTask &task, const ScanOptions &options) -> ScanSummary;
}
