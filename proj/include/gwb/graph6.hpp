#pragma once

#include "gwb/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace gwb
{
    /// Malformed graph6 input. offset is the 0-based byte position of the
    /// first offending byte (the line length when bytes are missing).
    class Graph6Error : public std::runtime_error
    {
    public:
        Graph6Error(const std::string &message, std::size_t offset);

        auto offset() const -> std::size_t { return offset_; }

    private:
        std::size_t offset_;
    };

    /// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
    /// CR/LF are tolerated. Non-zero padding bits are rejected.
    auto decode_graph6(std::string_view line) -> Graph;

    auto encode_graph6(const Graph &g) -> std::string;
}
