#include <pdom/errors.hpp>
#include <pdom/vertex_set.hpp>

#include <sstream>

using std::string;
using std::vector;

namespace pdom
{
    VertexSet::VertexSet(int width) : _width(width)
    {
        if (width < 0 || width > max_order)
            throw RangeError("vertex set width " + std::to_string(width) + " outside [0, 1024]");
    }

    VertexSet::VertexSet(int width, std::initializer_list<Vertex> members) : VertexSet(width)
    {
        for (auto v : members) {
            if (v < 0 || v >= width)
                throw RangeError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(width) + ")");
            insert(v);
        }
    }

    auto VertexSet::full(int width) -> VertexSet
    {
        VertexSet result(width);
        for (int w = 0; w < result.word_count(); ++w)
            result._words[w] = ~std::uint64_t{0};
        if (auto tail = width % bits_per_word; tail != 0)
            result._words[result.word_count() - 1] = (std::uint64_t{1} << tail) - 1;
        return result;
    }

    auto VertexSet::from_members(int width, const vector<Vertex> & members) -> VertexSet
    {
        VertexSet result(width);
        for (auto v : members) {
            if (v < 0 || v >= width)
                throw RangeError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(width) + ")");
            result.insert(v);
        }
        return result;
    }

    auto VertexSet::first() const -> Vertex
    {
        for (int w = 0; w < word_count(); ++w)
            if (_words[w])
                return w * bits_per_word + std::countr_zero(_words[w]);
        return -1;
    }

    auto VertexSet::next(Vertex v) const -> Vertex
    {
        int start = v + 1;
        if (start >= _width)
            return -1;
        int w = start / bits_per_word;
        auto word = _words[w] & (~std::uint64_t{0} << (start % bits_per_word));
        while (true) {
            if (word)
                return w * bits_per_word + std::countr_zero(word);
            if (++w >= word_count())
                return -1;
            word = _words[w];
        }
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        result.reserve(count());
        for (auto v : *this)
            result.push_back(v);
        return result;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        return full(_width) - *this;
    }

    auto VertexSet::operator==(const VertexSet & other) const -> bool
    {
        if (_width != other._width)
            return false;
        for (int w = 0; w < word_count(); ++w)
            if (_words[w] != other._words[w])
                return false;
        return true;
    }

    auto VertexSet::to_string() const -> string
    {
        std::ostringstream out;
        out << '{';
        bool first_member = true;
        for (auto v : *this) {
            if (! first_member)
                out << ", ";
            out << v;
            first_member = false;
        }
        out << '}';
        return out.str();
    }
}
