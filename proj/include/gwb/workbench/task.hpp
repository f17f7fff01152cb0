#pragma once

#include "gwb/crumby.hpp"
#include "gwb/list_pack.hpp"
#include "gwb/matching.hpp"
#include "gwb/order_types.hpp"
#include "gwb/rainbow.hpp"
#include "gwb/workbench/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwb::workbench
{
    /// Parameters for every task; each task reads the fields it owns.
    struct TaskOptions
    {
        /// Sub-mode: listpack {color|pack|chi|chi-star|gap}, matchings
        /// {enum|poor|rgraph|disjoint}, order {verify|find}.
        std::string mode;

        CrumbyParams crumby;

        int k = 0;
        int t = 0;
        int kmax = 4;
        std::optional<ListAssignment> lists;
        ListLimits limits;

        int r = 0;
        std::uint64_t matching_cap = default_matching_cap;

        int cap = -1;
        Rational offset{0, 1};

        OrderType order_type = OrderType::A;
        std::optional<Ordering> ordering;

        int xp_k = 1;
        int xp_max_k = 2;
    };

    struct ScanTask
    {
        /// props | chromatic-index | crumby | listpack | xp | rc | matchings | order
        std::string name;
        TaskOptions options;
        std::string filter;
    };

    struct TaskOutcome
    {
        Json verdict;
        Json cert;
        /// Short verdict class used for summary counts.
        std::string label;
        /// Conjecture-relevant anomaly worth surfacing, if any.
        std::optional<std::string> finding;
        /// The certificate re-verified under the owning module's checker.
        bool certificate_ok = true;
        /// The solver refused or rejected this graph; verdict holds the message.
        bool error = false;
    };

    auto task_names() -> std::vector<std::string>;

    /// Throws InputError for unknown tasks, modes, or missing parameters.
    void validate_task(const ScanTask &task);

    /// Runs the task on one graph. Solver refusals become error outcomes.
    auto evaluate_task(const ScanTask &task, const Graph &g) -> TaskOutcome;
}
