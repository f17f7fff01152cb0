#include "gwb/order_types.hpp"

namespace gwb
{
    namespace
    {
        auto may_place(const Graph &g, int v, VertexMask placed, OrderType type) -> bool
        {
            const int back = popcount(g.neighbors(v) & placed);
            if (back == 0 || back % 2 == 1)
                return true;
            return type == OrderType::B && (g.neighbors(v) & ~placed) == 0;
        }
    }

    auto to_string(OrderType type) -> char
    {
        return type == OrderType::A ? 'A' : 'B';
    }

    auto verify_order(const Graph &g, const Ordering &ordering, OrderType type, OrderStats *stats) -> OrderCheck
    {
        const int n = g.order();
        if (static_cast<int>(ordering.size()) != n)
            throw InputError("ordering has " + std::to_string(ordering.size()) + " entries for " + std::to_string(n) + " vertices");
        std::vector<int> position(n, -1);
        for (int i = 0; i < n; ++i) {
            int v = ordering[i];
            if (v < 0 || v >= n || position[v] >= 0)
                throw InputError("ordering is not a permutation");
            position[v] = i;
        }

        std::uint64_t steps = 0;
        OrderCheck result;
        for (int i = 0; i < n && result.ok; ++i) {
            const int v = ordering[i];
            int back = 0, forward = 0;
            ++steps;
            for_each_bit(g.neighbors(v), [&](int w) {
                ++steps;
                if (position[w] < i)
                    ++back;
                else
                    ++forward;
            });
            bool fine = back == 0 || back % 2 == 1 || (type == OrderType::B && forward == 0);
            if (! fine)
                result = {false, i + 1, back, forward};
        }
        if (stats)
            stats->steps += steps;
        return result;
    }

    auto find_order(const Graph &g, OrderType type) -> std::optional<Ordering>
    {
        const int n = g.order();
        if (n > order_search_max_order)
            throw SizeLimitError("order search refuses " + std::to_string(n) + " vertices (limit "
                + std::to_string(order_search_max_order) + ")");

        // completable[P]: the placed set P extends to a full valid ordering
        const std::uint64_t full = all_vertices(n);
        std::vector<bool> completable(std::size_t{1} << n, false);
        completable[full] = true;
        for (std::uint64_t p = full; p-- > 0;) {
            VertexMask open = full & ~p;
            while (open) {
                int v = lowest(open);
                open &= open - 1;
                if (completable[p | bit(v)] && may_place(g, v, p, type)) {
                    completable[p] = true;
                    break;
                }
            }
        }
        if (! completable[0])
            return std::nullopt;

        Ordering ordering;
        VertexMask placed = 0;
        while (placed != full) {
            VertexMask open = full & ~placed;
            while (open) {
                int v = lowest(open);
                open &= open - 1;
                if (completable[placed | bit(v)] && may_place(g, v, placed, type)) {
                    ordering.push_back(v);
                    placed |= bit(v);
                    break;
                }
            }
        }
        return ordering;
    }
}
