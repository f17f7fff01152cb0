#pragma once

#include "gwb/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwb
{
    using ColorSet = std::uint64_t;

    /// One finite color set per vertex; colors are integers 0..63.
    struct ListAssignment
    {
        std::vector<ColorSet> lists;

        /// Throws InputError unless there is one non-empty list per vertex of g.
        void validate(const Graph &g) const;

        /// k when every list has exactly k colors.
        auto uniform_size() const -> std::optional<int>;

        /// Every vertex of an n-vertex graph gets the same colors.
        static auto uniform(int n, ColorSet colors) -> ListAssignment;

        auto operator<=>(const ListAssignment &) const = default;
    };

    /// color[v] per vertex.
    using VertexColoring = std::vector<int>;

    struct Packing
    {
        std::vector<VertexColoring> colorings;
    };

    /// Proper L-coloring, or nullopt after exhaustive search.
    auto find_list_coloring(const Graph &g, const ListAssignment &lists) -> std::optional<VertexColoring>;

    /// t pairwise-disjoint proper L-colorings, or nullopt after exhaustive search.
    auto find_packing(const Graph &g, const ListAssignment &lists, int t) -> std::optional<Packing>;

    /// Checks the three packing conditions clause by clause.
    auto verify_packing(const Graph &g, const ListAssignment &lists, const Packing &packing) -> bool;

    /// Thrown when a list number is not determined within the requested bound.
    class BoundExceededError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct ListLimits
    {
        int max_order = 8;
        int max_k = 4;
    };

    struct AssignmentSweep
    {
        bool all_packable = true;
        /// First k-list-assignment in canonical order without a t-packing.
        std::optional<ListAssignment> witness;
        /// Complete assignments whose packability was decided before the verdict.
        std::uint64_t assignments_checked = 0;
    };

    /// Decides whether every k-list-assignment of g admits t pairwise-disjoint
    /// L-colorings (t = 1 is plain colorability). Assignments are enumerated up
    /// to color renaming: lists are visited vertex by vertex and any color not
    /// seen before must be the smallest unused one.
    ///
    /// jobs == 1 runs the plain depth-first sweep. Otherwise the sweep is cut at
    /// a shallow prefix depth and the subtrees are shared among jobs threads
    /// (0 = OpenMP default); the verdict, witness and count are identical.
    auto sweep_assignments(const Graph &g, int k, int t, int jobs = 1) -> AssignmentSweep;

    struct ListNumber
    {
        /// nullopt when no k <= k_max works; then the value is at least lower_bound.
        std::optional<int> value;
        int lower_bound = 0;
        /// Assignment with lists of size value - 1 (or k_max) that fails.
        std::optional<ListAssignment> witness;
        std::uint64_t assignments_checked = 0;
    };

    /// Choosability: least k such that every k-list-assignment is colorable.
    /// Sizes above the degeneracy are accepted without a sweep.
    auto chi_list(const Graph &g, int k_max, const ListLimits &limits = {}, int jobs = 1) -> ListNumber;

    /// List packing number: least k such that every k-list-assignment has a k-packing.
    auto chi_star_list(const Graph &g, int k_max, const ListLimits &limits = {}, int jobs = 1) -> ListNumber;

    struct RemovalGap
    {
        int chi_star = 0;
        int vertex_gap = 0;
        int worst_vertex = 0;
        /// Absent for edgeless graphs.
        std::optional<int> edge_gap;
        std::optional<Edge> worst_edge;
    };

    /// max over v of chi*(g) - chi*(g - v), and likewise over edges. Requires n >= 2.
    auto removal_gap(const Graph &g, int k_max, const ListLimits &limits = {}, int jobs = 1) -> RemovalGap;

    auto format_color_set(ColorSet s) -> std::string;
}
