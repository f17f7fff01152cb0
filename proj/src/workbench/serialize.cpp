#include "gwb/workbench/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace gwb::workbench
{
    namespace
    {
        auto to_int(std::string_view s) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
                throw InputError("expected integer, got '" + std::string(s) + "'");
            return value;
        }

        auto split(std::string_view s, char sep) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            while (start <= s.size()) {
                auto end = s.find(sep, start);
                if (end == std::string_view::npos)
                    end = s.size();
                parts.push_back(s.substr(start, end - start));
                start = end + 1;
            }
            return parts;
        }

        auto tokens(std::string_view s) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> out;
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                    ++i;
                std::size_t start = i;
                while (i < s.size() && ! std::isspace(static_cast<unsigned char>(s[i])))
                    ++i;
                if (i > start)
                    out.push_back(s.substr(start, i - start));
            }
            return out;
        }
    }

    auto format_edge_coloring(const EdgeColoring &col) -> std::string
    {
        std::string out;
        for (auto [u, v, c] : col.entries)
            out += std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(c) + "\n";
        return out;
    }

    auto parse_edge_coloring(std::string_view text, int colors) -> EdgeColoring
    {
        EdgeColoring col;
        int highest = 0;
        for (auto line : split(text, '\n')) {
            auto t = tokens(line);
            if (t.empty())
                continue;
            if (t.size() != 3)
                throw InputError("edge coloring line needs 'u v color': '" + std::string(line) + "'");
            ColoredEdge e{to_int(t[0]), to_int(t[1]), to_int(t[2])};
            highest = std::max(highest, e.color);
            col.entries.push_back(e);
        }
        col.colors = colors >= 0 ? colors : highest;
        return col;
    }

    auto format_matching(const Matching &m) -> std::string
    {
        Matching sorted;
        for (auto e : m)
            sorted.push_back(make_edge(e.u, e.v));
        std::sort(sorted.begin(), sorted.end());
        std::string out;
        for (auto e : sorted) {
            if (! out.empty())
                out += " ";
            out += to_string(e);
        }
        return out;
    }

    auto parse_matching(std::string_view text) -> Matching
    {
        Matching m;
        for (auto tok : tokens(text)) {
            auto dash = tok.find('-');
            if (dash == std::string_view::npos)
                throw InputError("matching pair needs 'u-v': '" + std::string(tok) + "'");
            m.push_back({to_int(tok.substr(0, dash)), to_int(tok.substr(dash + 1))});
        }
        return m;
    }

    auto format_ordering(const Ordering &o) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < o.size(); ++i)
            out += (i ? " " : "") + std::to_string(o[i]);
        return out;
    }

    auto parse_ordering(std::string_view text) -> Ordering
    {
        Ordering o;
        for (auto tok : tokens(text))
            o.push_back(to_int(tok));
        return o;
    }

    auto bipartition_json(const Bipartition &p) -> Json
    {
        char hex[32];
        std::snprintf(hex, sizeof hex, "0x%llx", static_cast<unsigned long long>(p.blue));
        Json blue = Json::array();
        for_each_bit(p.blue, [&](int v) { blue.push_back(v); });
        return Json{{"blue_hex", hex}, {"blue", blue}};
    }

    auto parse_bipartition(const Json &j) -> Bipartition
    {
        return {std::stoull(j.at("blue_hex").get<std::string>(), nullptr, 16)};
    }

    auto list_assignment_json(const ListAssignment &l) -> Json
    {
        Json out = Json::array();
        for (auto s : l.lists) {
            Json colors = Json::array();
            for_each_bit(s, [&](int c) { colors.push_back(c); });
            out.push_back(colors);
        }
        return out;
    }

    auto parse_list_assignment(const Json &j) -> ListAssignment
    {
        ListAssignment l;
        for (const auto &colors : j) {
            ColorSet s = 0;
            for (const auto &c : colors) {
                int value = c.get<int>();
                if (value < 0 || value >= 64)
                    throw InputError("color " + std::to_string(value) + " outside 0..63");
                s |= ColorSet{1} << value;
            }
            l.lists.push_back(s);
        }
        return l;
    }

    auto parse_list_text(std::string_view text) -> ListAssignment
    {
        ListAssignment l;
        if (tokens(text).empty())
            return l;
        for (auto vertex : split(text, ';')) {
            ColorSet s = 0;
            if (tokens(vertex).empty()) {
                l.lists.push_back(s);
                continue;
            }
            for (auto c : split(vertex, ',')) {
                auto t = tokens(c);
                if (t.size() != 1)
                    throw InputError("bad color entry '" + std::string(c) + "'");
                int value = to_int(t[0]);
                if (value < 0 || value >= 64)
                    throw InputError("color " + std::to_string(value) + " outside 0..63");
                s |= ColorSet{1} << value;
            }
            l.lists.push_back(s);
        }
        return l;
    }

    auto packing_json(const Packing &p) -> Json
    {
        Json out = Json::array();
        for (const auto &c : p.colorings)
            out.push_back(c);
        return out;
    }

    auto parse_packing(const Json &j) -> Packing
    {
        Packing p;
        for (const auto &row : j)
            p.colorings.push_back(row.get<VertexColoring>());
        return p;
    }
}
