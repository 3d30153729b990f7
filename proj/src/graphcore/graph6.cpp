#include <pdom/errors.hpp>
#include <pdom/graph6.hpp>

#include <string>
#include <vector>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace pdom
{
    namespace
    {
        constexpr int bias = 63;
        constexpr char max_byte = 126;
        constexpr string_view header = ">>graph6<<";

        auto sextet(char c, std::size_t position) -> int
        {
            if (c < bias || c > max_byte)
                throw ParseError("byte " + to_string(static_cast<unsigned char>(c)) + " at offset " +
                    to_string(position) + " is not a graph6 character");
            return c - bias;
        }

        auto adjacency_bytes(long long order) -> long long
        {
            return (order * (order - 1) / 2 + 5) / 6;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        if (text.empty())
            throw ParseError("empty graph6 line");
        if (text.front() == ':' || text.starts_with(">>sparse6<<"))
            throw ParseError("sparse6 input is not supported");
        if (text.front() == '&' || text.starts_with(">>digraph6<<"))
            throw ParseError("digraph6 input is not supported");

        std::size_t pos = 0;
        long long order = 0;
        if (text[0] != max_byte) {
            order = sextet(text[0], 0);
            pos = 1;
        }
        else if (text.size() >= 2 && text[1] != max_byte) {
            if (text.size() < 4)
                throw ParseError("truncated graph6 length prefix");
            for (pos = 1; pos < 4; ++pos)
                order = (order << 6) | sextet(text[pos], pos);
            if (order <= 62)
                throw ParseError("non-minimal graph6 length prefix");
        }
        else {
            if (text.size() < 8)
                throw ParseError("truncated graph6 length prefix");
            for (pos = 2; pos < 8; ++pos)
                order = (order << 6) | sextet(text[pos], pos);
            if (order <= 258047)
                throw ParseError("non-minimal graph6 length prefix");
        }

        if (order < 1)
            throw RangeError("graph6 order 0 is not supported");
        if (order > max_order)
            throw RangeError("graph6 order " + to_string(order) + " exceeds 1024");

        auto expected = adjacency_bytes(order);
        auto available = static_cast<long long>(text.size() - pos);
        if (available < expected)
            throw ParseError("graph6 adjacency data truncated: expected " + to_string(expected) + " bytes, found " +
                to_string(available));
        if (available > expected)
            throw ParseError("trailing bytes after graph6 adjacency data");

        vector<Edge> edges;
        int n = static_cast<int>(order);
        long long bit = 0;
        int current = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                if (bit % 6 == 0)
                    current = sextet(text[pos + bit / 6], pos + bit / 6);
                if ((current >> (5 - bit % 6)) & 1)
                    edges.emplace_back(i, j);
            }
        if (bit % 6 != 0) {
            int padding = 6 - static_cast<int>(bit % 6);
            if (current & ((1 << padding) - 1))
                throw ParseError("nonzero graph6 padding bits");
        }

        return Graph(n, edges);
    }

    auto write_graph6(const Graph & g) -> string
    {
        string result;
        int n = g.order();
        if (n <= 62)
            result.push_back(static_cast<char>(bias + n));
        else {
            result.push_back(max_byte);
            for (int shift = 12; shift >= 0; shift -= 6)
                result.push_back(static_cast<char>(bias + ((n >> shift) & 0x3f)));
        }

        int current = 0;
        int filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result.push_back(static_cast<char>(bias + current));
                    current = 0;
                    filled = 0;
                }
            }
        if (filled != 0)
            result.push_back(static_cast<char>(bias + (current << (6 - filled))));
        return result;
    }
}
