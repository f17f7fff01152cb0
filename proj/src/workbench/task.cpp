#include "gwb/workbench/task.hpp"

#include "gwb/edge_color.hpp"
#include "gwb/properties.hpp"

#include <algorithm>

namespace gwb::workbench
{
    namespace
    {
        auto crumby_params_json(const CrumbyParams &p) -> Json
        {
            return {{"max_blue_degree", p.max_blue_degree}, {"min_red_degree", p.min_red_degree},
                {"forbidden_red_path_edges", p.forbidden_red_path_edges}};
        }

        auto matching_pair_json(const std::optional<std::pair<Matching, Matching>> &pair) -> Json
        {
            if (! pair)
                return nullptr;
            return Json::array({format_matching(pair->first), format_matching(pair->second)});
        }

        auto pair_ok(const Graph &g, const std::optional<std::pair<Matching, Matching>> &pair) -> bool
        {
            return ! pair
                || (is_perfect_matching(g, pair->first) && is_perfect_matching(g, pair->second)
                    && edge_disjoint(pair->first, pair->second));
        }

        /// r-regular, every odd set cut by at least r edges, and edge connectivity at least r.
        auto is_connected_r_graph(const Graph &g, int r) -> bool
        {
            if (g.order() == 0 || g.min_degree() != r || g.max_degree() != r || g.order() > r_graph_max_order)
                return false;
            return is_r_graph(g, r).is_r_graph && edge_connectivity(g) >= r;
        }

        auto props(const Graph &g) -> TaskOutcome
        {
            auto p = properties(g);
            auto c = connectivity(g);
            TaskOutcome out;
            out.verdict = {{"n", p.n}, {"m", p.m}, {"min_degree", p.min_degree}, {"max_degree", p.max_degree},
                {"regular", p.is_regular}, {"regularity", p.regularity}, {"bipartite", p.is_bipartite},
                {"triangle_free", p.is_triangle_free}, {"connected", p.is_connected},
                {"diameter", p.diameter ? Json(*p.diameter) : Json(nullptr)}, {"kappa", c.kappa}, {"lambda", c.lambda},
                {"planar", is_planar(g)}};
            out.cert = nullptr;
            out.label = "ok";
            return out;
        }

        auto edge_class(const Graph &g) -> TaskOutcome
        {
            auto v = chromatic_index(g);
            const int delta = g.max_degree();
            TaskOutcome out;
            out.verdict = {{"chromatic_index", v.chromatic_index}, {"class", v.class_label}, {"max_degree", delta},
                {"overfull", is_overfull(g)}};
            out.cert = format_edge_coloring(v.certificate);
            out.label = "class" + std::to_string(v.class_label);
            out.certificate_ok = verify_edge_coloring(g, v.certificate) && v.certificate.colors == v.chromatic_index
                && (v.chromatic_index == delta || v.chromatic_index == delta + 1 || delta == 0);
            if (v.class_label == 2 && delta == 5 && is_connected_r_graph(g, 5))
                out.finding = "Class 2 graph that is 5-regular, 5-edge-connected and a 5-graph";
            else if (v.class_label == 2 && delta == 5 && g.min_degree() == 5 && edge_connectivity(g) >= 5)
                out.finding = "Class 2 graph that is 5-regular and 5-edge-connected";
            return out;
        }

        auto crumby(const Graph &g, const TaskOptions &o) -> TaskOutcome
        {
            auto found = find_crumby(g, o.crumby);
            TaskOutcome out;
            out.verdict = {{"exists", found.has_value()}, {"params", crumby_params_json(o.crumby)}};
            out.cert = found ? bipartition_json(*found) : Json(nullptr);
            out.label = found ? "exists" : "none";
            out.certificate_ok = ! found || check_crumby(g, *found, o.crumby).ok;
            if (! found)
                out.finding = "no partition satisfies the crumby parameters";
            return out;
        }

        auto listpack(const Graph &g, const TaskOptions &o) -> TaskOutcome
        {
            TaskOutcome out;
            const int jobs = 1;
            if (o.mode == "color" || o.mode == "pack") {
                const int t = o.mode == "color" ? 1 : (o.t > 0 ? o.t : std::max(o.k, 1));
                if (o.lists) {
                    auto packing = find_packing(g, *o.lists, t);
                    out.verdict = {{"t", t}, {"packable", packing.has_value()}};
                    out.cert = packing ? packing_json(*packing) : Json(nullptr);
                    out.label = packing ? "packable" : "none";
                    out.certificate_ok = ! packing || verify_packing(g, *o.lists, *packing);
                    return out;
                }
                if (g.order() > o.limits.max_order)
                    throw SizeLimitError("list sweep refuses " + std::to_string(g.order()) + " vertices");
                auto sweep = sweep_assignments(g, o.k, t, jobs);
                out.verdict = {{"k", o.k}, {"t", t}, {"all_packable", sweep.all_packable},
                    {"assignments_checked", sweep.assignments_checked}};
                out.cert = sweep.witness ? list_assignment_json(*sweep.witness) : Json(nullptr);
                out.label = sweep.all_packable ? "all" : "witness";
                out.certificate_ok = ! sweep.witness || ! find_packing(g, *sweep.witness, t).has_value();
                if (o.mode == "pack" && ! sweep.all_packable)
                    out.finding = "a " + std::to_string(o.k) + "-list-assignment without " + std::to_string(t)
                        + " disjoint proper colorings";
                return out;
            }

            if (o.mode == "chi") {
                auto r = chi_list(g, o.kmax, o.limits, jobs);
                out.verdict = {{"chi_list", r.value ? Json(*r.value) : Json(nullptr)}, {"lower_bound", r.lower_bound},
                    {"assignments_checked", r.assignments_checked}};
                out.cert = r.witness ? list_assignment_json(*r.witness) : Json(nullptr);
                out.label = r.value ? "chi=" + std::to_string(*r.value) : "exceeded";
                out.certificate_ok = ! r.witness || ! find_list_coloring(g, *r.witness).has_value();
                return out;
            }

            if (o.mode == "chi-star") {
                auto star = chi_star_list(g, o.kmax, o.limits, jobs);
                auto plain = chi_list(g, o.kmax, o.limits, jobs);
                out.verdict = {{"chi_star", star.value ? Json(*star.value) : Json(nullptr)},
                    {"lower_bound", star.lower_bound}, {"chi_list", plain.value ? Json(*plain.value) : Json(nullptr)},
                    {"max_degree", g.max_degree()}, {"assignments_checked", star.assignments_checked}};
                out.cert = star.witness ? list_assignment_json(*star.witness) : Json(nullptr);
                out.label = star.value ? "chi*=" + std::to_string(*star.value) : "exceeded";
                if (star.witness) {
                    const int k = star.witness->uniform_size().value_or(0);
                    out.certificate_ok = ! find_packing(g, *star.witness, k).has_value();
                }
                if (star.value && plain.value) {
                    const int cs = *star.value, cl = *plain.value;
                    if (cs > cl + 1)
                        out.finding = "list packing number exceeds choosability + 1";
                    else if (cs > 2 * cl)
                        out.finding = "list packing number exceeds twice the choosability";
                }
                if (! out.finding && star.lower_bound > g.max_degree() + 1)
                    out.finding = "list packing number exceeds max degree + 1";
                if (! out.finding && is_planar(g)) {
                    if (star.lower_bound >= 6)
                        out.finding = "planar graph with list packing number at least 6";
                    else if (star.lower_bound > 4 && is_triangle_free(g))
                        out.finding = "triangle-free planar graph with list packing number above 4";
                }
                return out;
            }

            // gap
            auto gap = removal_gap(g, o.kmax, o.limits, jobs);
            out.verdict = {{"chi_star", gap.chi_star}, {"vertex_gap", gap.vertex_gap}, {"worst_vertex", gap.worst_vertex},
                {"edge_gap", gap.edge_gap ? Json(*gap.edge_gap) : Json(nullptr)},
                {"worst_edge", gap.worst_edge ? Json(to_string(*gap.worst_edge)) : Json(nullptr)}};
            out.cert = nullptr;
            out.label = "gap=" + std::to_string(std::max(gap.vertex_gap, gap.edge_gap.value_or(gap.vertex_gap)));
            if (gap.vertex_gap > 2 || gap.edge_gap.value_or(0) > 2)
                out.finding = "removing one vertex or edge lowers the list packing number by more than 2";
            return out;
        }

        auto rainbow(const Graph &g, const TaskOptions &o) -> TaskOutcome
        {
            auto v = rainbow_connection_number(g, o.cap);
            const bool hypothesis = ! g.is_complete() && is_connected(g) && meets_min_degree(g, o.offset);
            TaskOutcome out;
            using Status = RcVerdict::Status;
            const char *status = v.status == Status::exact ? "exact" : v.status == Status::disconnected ? "disconnected" : "cap-exceeded";
            out.verdict = {{"status", status}, {"rc", v.status == Status::disconnected ? Json(nullptr) : Json(v.rc)},
                {"min_degree", g.min_degree()}, {"meets_threshold", hypothesis}};
            out.cert = v.status == Status::exact ? Json(format_edge_coloring(v.certificate)) : Json(nullptr);
            out.label = v.status == Status::exact ? "rc=" + std::to_string(v.rc) : status;
            if (v.status == Status::exact && g.order() > 1) {
                auto check = is_rainbow_connected(g, v.certificate);
                out.certificate_ok = check.rainbow_connected && v.certificate.colors == v.rc;
            }
            if (hypothesis && v.rc > 2)
                out.finding = "rc > 2 although the graph is non-complete with min degree >= n/2 + offset";
            return out;
        }

        auto matchings(const Graph &g, const TaskOptions &o) -> TaskOutcome
        {
            TaskOutcome out;
            if (o.mode == "enum") {
                auto e = perfect_matchings(g, o.matching_cap);
                Json list = Json::array();
                bool ok = true;
                for (const auto &m : e.matchings) {
                    list.push_back(format_matching(m));
                    ok = ok && is_perfect_matching(g, m);
                }
                out.verdict = {{"count", e.matchings.size()}, {"truncated", e.truncated}};
                out.cert = list;
                out.label = e.truncated ? "truncated" : "pm=" + std::to_string(e.matchings.size());
                out.certificate_ok = ok;
                return out;
            }
            if (o.mode == "poor") {
                auto v = is_poorly_matchable(g, o.matching_cap);
                out.verdict = {{"poorly_matchable", v.poorly_matchable}, {"pm_count", v.pm_count},
                    {"count_truncated", v.count_truncated}};
                out.cert = matching_pair_json(v.witness);
                out.label = v.poorly_matchable ? "poor" : "not-poor";
                out.certificate_ok = pair_ok(g, v.witness);
                if (v.poorly_matchable && v.pm_count >= 2 && is_connected_r_graph(g, 5))
                    out.finding = "poorly matchable 5-edge-connected 5-graph";
                return out;
            }
            if (o.mode == "disjoint") {
                auto v = has_two_disjoint_pms(g, o.matching_cap);
                out.verdict = {{"has_pair", v.has_pair}, {"pm_count", v.pm_count}, {"count_truncated", v.count_truncated}};
                out.cert = matching_pair_json(v.witness);
                out.label = v.has_pair ? "pair" : "no-pair";
                out.certificate_ok = pair_ok(g, v.witness);
                const int r = g.order() ? g.max_degree() : 0;
                if (! v.has_pair && r >= 5 && is_connected_r_graph(g, r))
                    out.finding = "r-edge-connected r-graph (r >= 5) without two disjoint perfect matchings";
                return out;
            }
            // rgraph
            auto v = is_r_graph(g, o.r);
            out.verdict = {{"r", o.r}, {"r_graph", v.is_r_graph}, {"reason", v.reason}};
            if (v.witness) {
                Json set = Json::array();
                for_each_bit(v.witness->set, [&](int x) { set.push_back(x); });
                out.cert = {{"set", set}, {"cut_size", v.witness->cut_size}};
                out.certificate_ok = (popcount(v.witness->set) % 2 == 1) && cut_size(g, v.witness->set) == v.witness->cut_size
                    && v.witness->cut_size < o.r;
            }
            else
                out.cert = nullptr;
            out.label = v.is_r_graph ? "r-graph" : "not-r-graph";
            return out;
        }

        auto order(const Graph &g, const TaskOptions &o) -> TaskOutcome
        {
            TaskOutcome out;
            if (o.mode == "verify") {
                auto c = verify_order(g, *o.ordering, o.order_type);
                out.verdict = {{"type", std::string(1, to_string(o.order_type))}, {"ok", c.ok},
                    {"violation_position", c.violation_position ? Json(*c.violation_position) : Json(nullptr)},
                    {"back_degree", c.back_degree}, {"forward_degree", c.forward_degree}};
                out.cert = nullptr;
                out.label = c.ok ? "valid" : "invalid";
                return out;
            }
            auto a = find_order(g, OrderType::A);
            auto b = find_order(g, OrderType::B);
            const auto &mine = o.order_type == OrderType::A ? a : b;
            out.verdict = {{"type", std::string(1, to_string(o.order_type))}, {"exists", mine.has_value()},
                {"type_a", a.has_value()}, {"type_b", b.has_value()}};
            out.cert = mine ? Json(format_ordering(*mine)) : Json(nullptr);
            out.label = mine ? "exists" : "none";
            out.certificate_ok = (! a || verify_order(g, *a, OrderType::A).ok) && (! b || verify_order(g, *b, OrderType::B).ok)
                && (! a || b.has_value());
            return out;
        }
    }

    auto task_names() -> std::vector<std::string>
    {
        return {"props", "chromatic-index", "crumby", "listpack", "xp", "rc", "matchings", "order"};
    }

    void validate_task(const ScanTask &task)
    {
        const auto names = task_names();
        if (std::find(names.begin(), names.end(), task.name) == names.end())
            throw InputError("unknown task '" + task.name + "'");
        const auto &o = task.options;
        auto require_mode = [&](std::vector<std::string> modes) {
            if (std::find(modes.begin(), modes.end(), o.mode) == modes.end())
                throw InputError("task " + task.name + " needs a mode, got '" + o.mode + "'");
        };
        if (task.name == "listpack") {
            require_mode({"color", "pack", "chi", "chi-star", "gap"});
            if ((o.mode == "color" || o.mode == "pack") && ! o.lists && o.k < 1)
                throw InputError("listpack " + o.mode + " needs --lists or --k");
            if (o.kmax < 1)
                throw InputError("--kmax must be at least 1");
        }
        else if (task.name == "matchings") {
            require_mode({"enum", "poor", "rgraph", "disjoint"});
            if (o.mode == "rgraph" && o.r < 0)
                throw InputError("--r must be non-negative");
        }
        else if (task.name == "order") {
            require_mode({"verify", "find"});
            if (o.mode == "verify" && ! o.ordering)
                throw InputError("order verify needs --order");
        }
        else if (task.name == "crumby") {
            const auto &p = o.crumby;
            if (p.max_blue_degree < 0 || p.min_red_degree < 0 || p.forbidden_red_path_edges < 0)
                throw InputError("crumby parameters must be non-negative");
        }
    }

    auto evaluate_task(const ScanTask &task, const Graph &g) -> TaskOutcome
    {
        try {
            const auto &o = task.options;
            if (task.name == "props")
                return props(g);
            if (task.name == "chromatic-index")
                return edge_class(g);
            if (task.name == "crumby")
                return crumby(g, o);
            if (task.name == "listpack")
                return listpack(g, o);
            if (task.name == "rc")
                return rainbow(g, o);
            if (task.name == "matchings")
                return matchings(g, o);
            if (task.name == "order")
                return order(g, o);
            throw InputError("task '" + task.name + "' does not take graph input");
        }
        catch (const std::exception &e) {
            TaskOutcome out;
            out.verdict = {{"error", e.what()}};
            out.cert = nullptr;
            out.label = "error";
            out.error = true;
            return out;
        }
    }
}
