#pragma once

#include <pdom/graph.hpp>

#include <string>
#include <string_view>

namespace pdom
{
    /**
     * Decode one graph6 line. An optional ">>graph6<<" header and a trailing
     * newline are accepted. sparse6 and digraph6 lines are rejected, as are
     * orders above 1024, non-printable bytes, nonzero padding bits, and bytes
     * after the adjacency data. Throws ParseError or RangeError.
     */
    auto parse_graph6(std::string_view text) -> Graph;

    /// Canonical graph6 encoding: no header, shortest length prefix, zero padding.
    auto write_graph6(const Graph & g) -> std::string;
}
