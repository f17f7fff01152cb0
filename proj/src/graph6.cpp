#include "gwb/graph6.hpp"

namespace gwb
{
    namespace
    {
        constexpr std::string_view header = ">>graph6<<";

        auto chunk_value(std::string_view text, std::size_t pos, std::size_t base) -> int
        {
            if (pos >= text.size())
                throw Graph6Error("truncated graph6 line", base + text.size());
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", base + pos);
            return c - 63;
        }
    }

    Graph6Error::Graph6Error(const std::string &message, std::size_t offset) :
        std::runtime_error("graph6: " + message + " at byte " + std::to_string(offset)),
        offset_(offset)
    {
    }

    auto decode_graph6(std::string_view line) -> Graph
    {
        std::size_t base = 0;
        if (line.starts_with(header)) {
            line.remove_prefix(header.size());
            base = header.size();
        }
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.remove_suffix(1);

        if (line.empty())
            throw Graph6Error("empty line", base);

        std::size_t pos = 0;
        long n = 0;
        if (line[0] == '~') {
            if (line.size() > 1 && line[1] == '~')
                throw Graph6Error("8-byte order prefix implies more than 64 vertices", base + 1);
            for (int i = 1; i <= 3; ++i)
                n = (n << 6) | chunk_value(line, i, base);
            pos = 4;
        }
        else {
            n = chunk_value(line, 0, base);
            pos = 1;
        }
        if (n > max_vertices)
            throw Graph6Error("order " + std::to_string(n) + " exceeds " + std::to_string(max_vertices), base);

        const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
        const std::size_t expected = pos + (bits + 5) / 6;
        if (line.size() < expected)
            throw Graph6Error("truncated graph6 line", base + line.size());
        if (line.size() > expected)
            throw Graph6Error("trailing bytes after edge data", base + expected);

        GraphBuilder b(static_cast<int>(n));
        std::size_t k = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++k) {
                int chunk = chunk_value(line, pos + k / 6, base);
                if ((chunk >> (5 - k % 6)) & 1)
                    b.add_edge(u, v);
            }
        if (k % 6 != 0) {
            int chunk = chunk_value(line, pos + k / 6, base);
            if (chunk & ((1 << (6 - k % 6)) - 1))
                throw Graph6Error("non-zero padding bits", base + pos + k / 6);
        }
        return b.build();
    }

    auto encode_graph6(const Graph &g) -> std::string
    {
        const int n = g.order();
        std::string out;
        if (n <= 62)
            out.push_back(static_cast<char>(63 + n));
        else {
            out.push_back('~');
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }

        int chunk = 0, filled = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(63 + chunk));
                    chunk = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
        return out;
    }
}
