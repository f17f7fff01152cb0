#pragma once

#include "gwb/edge_color.hpp"
#include "gwb/graph.hpp"

#include <vector>

namespace gwb
{
    /// Extended Petersen parameters: ring size 4k+1, distance set S of size k
    /// drawn from 1..2k. Layer 2 uses the complementary distances.
    struct XpParams
    {
        int k = 1;
        std::vector<int> distances;

        auto ring_size() const -> int { return 4 * k + 1; }
        /// {1..2k} minus S, ascending.
        auto complement() const -> std::vector<int>;
        /// Throws InputError unless |S| = k, S within 1..2k, no repeats, k >= 1.
        void validate() const;
    };

    /// Layer 1 on vertices 0..n-1 is circulant with distances S, layer 2 on
    /// n..2n-1 circulant with the complement, spokes i -- n+i.
    auto build_xp(const XpParams &p) -> Graph;

    /// Every size-k subset of 1..2k in lexicographic order.
    auto admissible_distance_sets(int k) -> std::vector<std::vector<int>>;

    struct XpRecord
    {
        std::vector<int> distances;
        ClassVerdict verdict;
        bool petersen_isomorphic = false;
    };

    struct XpScan
    {
        int k = 0;
        std::vector<XpRecord> records;
        /// Class 2 occurs only on graphs isomorphic to the Petersen graph.
        bool conjecture_consistent = true;
    };

    inline constexpr int xp_default_max_k = 2;

    /// Classifies XP(2(4k+1), S) for every admissible S. Records are ordered by S
    /// whatever the number of jobs. Refuses k < 1 and k > max_k.
    auto scan_conjecture(int k, int max_k = xp_default_max_k, int jobs = 1) -> XpScan;
}
