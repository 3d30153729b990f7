#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pdom
{
    using Vertex = int;

    inline constexpr int max_order = 1024;

    /**
     * Fixed-capacity bit vector over the vertex indices [0, width).
     *
     * Storage is inline; every operation only touches the words covering the
     * width, so sets over graphs with at most 64 vertices cost one word.
     */
    class VertexSet
    {
    public:
        static constexpr int bits_per_word = 64;
        static constexpr int max_words = max_order / bits_per_word;

        class Iterator
        {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = Vertex;
            using difference_type = std::ptrdiff_t;
            using pointer = const Vertex *;
            using reference = Vertex;

            Iterator() = default;
            Iterator(const VertexSet * set, Vertex at) : _set(set), _at(at) {}

            auto operator*() const -> Vertex { return _at; }
            auto operator++() -> Iterator &
            {
                _at = _set->next(_at);
                return *this;
            }
            auto operator++(int) -> Iterator
            {
                auto old = *this;
                ++*this;
                return old;
            }
            auto operator==(const Iterator & other) const -> bool { return _at == other._at; }

        private:
            const VertexSet * _set = nullptr;
            Vertex _at = -1;
        };

        VertexSet() = default;
        explicit VertexSet(int width);
        VertexSet(int width, std::initializer_list<Vertex> members);

        static auto full(int width) -> VertexSet;
        static auto from_members(int width, const std::vector<Vertex> & members) -> VertexSet;

        auto width() const -> int { return _width; }

        auto contains(Vertex v) const -> bool
        {
            return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1U;
        }

        auto insert(Vertex v) -> void { _words[v / bits_per_word] |= std::uint64_t{1} << (v % bits_per_word); }
        auto erase(Vertex v) -> void { _words[v / bits_per_word] &= ~(std::uint64_t{1} << (v % bits_per_word)); }

        auto count() const -> int
        {
            int result = 0;
            for (int w = 0; w < word_count(); ++w)
                result += std::popcount(_words[w]);
            return result;
        }

        auto empty() const -> bool
        {
            for (int w = 0; w < word_count(); ++w)
                if (_words[w])
                    return false;
            return true;
        }

        /// Smallest member, or -1 for the empty set.
        auto first() const -> Vertex;

        /// Smallest member greater than v, or -1.
        auto next(Vertex v) const -> Vertex;

        auto members() const -> std::vector<Vertex>;

        auto intersects(const VertexSet & other) const -> bool
        {
            for (int w = 0; w < word_count(); ++w)
                if (_words[w] & other._words[w])
                    return true;
            return false;
        }

        auto intersection_count(const VertexSet & other) const -> int
        {
            int result = 0;
            for (int w = 0; w < word_count(); ++w)
                result += std::popcount(_words[w] & other._words[w]);
            return result;
        }

        auto is_subset_of(const VertexSet & other) const -> bool
        {
            for (int w = 0; w < word_count(); ++w)
                if (_words[w] & ~other._words[w])
                    return false;
            return true;
        }

        auto operator|=(const VertexSet & other) -> VertexSet &
        {
            for (int w = 0; w < word_count(); ++w)
                _words[w] |= other._words[w];
            return *this;
        }

        auto operator&=(const VertexSet & other) -> VertexSet &
        {
            for (int w = 0; w < word_count(); ++w)
                _words[w] &= other._words[w];
            return *this;
        }

        /// Set difference.
        auto operator-=(const VertexSet & other) -> VertexSet &
        {
            for (int w = 0; w < word_count(); ++w)
                _words[w] &= ~other._words[w];
            return *this;
        }

        auto complement() const -> VertexSet;

        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        auto operator==(const VertexSet & other) const -> bool;

        auto begin() const -> Iterator { return Iterator{this, first()}; }
        auto end() const -> Iterator { return Iterator{this, -1}; }

        /// "{0, 3, 5}"
        auto to_string() const -> std::string;

    private:
        auto word_count() const -> int { return (_width + bits_per_word - 1) / bits_per_word; }

        std::array<std::uint64_t, max_words> _words{};
        int _width = 0;
    };
}
