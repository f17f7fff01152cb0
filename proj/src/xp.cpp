#include "gwb/xp.hpp"

#include "gwb/generators.hpp"
#include "gwb/isomorphism.hpp"

#include <algorithm>

#include <omp.h>

namespace gwb
{
    auto XpParams::complement() const -> std::vector<int>
    {
        std::vector<int> rest;
        for (int d = 1; d <= 2 * k; ++d)
            if (std::find(distances.begin(), distances.end(), d) == distances.end())
                rest.push_back(d);
        return rest;
    }

    void XpParams::validate() const
    {
        if (k < 1)
            throw InputError("XP needs k >= 1");
        if (2 * ring_size() > max_vertices)
            throw InputError("XP with k = " + std::to_string(k) + " exceeds " + std::to_string(max_vertices) + " vertices");
        if (static_cast<int>(distances.size()) != k)
            throw InputError("XP distance set must have exactly k = " + std::to_string(k) + " elements");
        auto sorted = distances;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("XP distance set has repeated elements");
        for (int d : sorted)
            if (d < 1 || d > 2 * k)
                throw InputError("XP distance " + std::to_string(d) + " outside 1.." + std::to_string(2 * k));
    }

    auto build_xp(const XpParams &p) -> Graph
    {
        p.validate();
        const int n = p.ring_size();
        GraphBuilder b(2 * n);
        for (int d : p.distances)
            for (int i = 0; i < n; ++i)
                b.add_edge(i, (i + d) % n);
        for (int d : p.complement())
            for (int i = 0; i < n; ++i)
                b.add_edge(n + i, n + (i + d) % n);
        for (int i = 0; i < n; ++i)
            b.add_edge(i, n + i);
        return b.build();
    }

    auto admissible_distance_sets(int k) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> sets;
        std::vector<int> current;
        auto recurse = [&](auto &self, int next) -> void {
            if (static_cast<int>(current.size()) == k) {
                sets.push_back(current);
                return;
            }
            for (int d = next; d <= 2 * k; ++d) {
                current.push_back(d);
                self(self, d + 1);
                current.pop_back();
            }
        };
        recurse(recurse, 1);
        return sets;
    }

    auto scan_conjecture(int k, int max_k, int jobs) -> XpScan
    {
        if (k < 1)
            throw InputError("XP scan needs k >= 1");
        if (k > max_k)
            throw SizeLimitError("XP scan refuses k = " + std::to_string(k) + " (limit " + std::to_string(max_k) + ")");

        XpScan scan;
        scan.k = k;
        auto sets = admissible_distance_sets(k);
        scan.records.resize(sets.size());
        const Graph petersen = petersen_graph();
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (long i = 0; i < static_cast<long>(sets.size()); ++i) {
            Graph g = build_xp({k, sets[i]});
            scan.records[i] = {sets[i], chromatic_index(g), are_isomorphic(g, petersen).isomorphic};
        }

        for (const auto &r : scan.records)
            if (r.verdict.class_label == 2 && ! r.petersen_isomorphic)
                scan.conjecture_consistent = false;
        return scan;
    }
}
