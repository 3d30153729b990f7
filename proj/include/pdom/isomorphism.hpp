#pragma once

#include <pdom/graph.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace pdom
{
    inline constexpr int max_isomorphism_order = 32;

    /**
     * Canonical adjacency code: rows[i] has bit j set when the vertices
     * labelled i and j are adjacent. Two graphs are isomorphic exactly when
     * their canonical forms compare equal.
     */
    struct CanonicalForm
    {
        int order = 0;
        std::vector<std::uint32_t> rows;

        auto operator<=>(const CanonicalForm &) const = default;
    };

    /// Individualisation-refinement search over colour-refined partitions,
    /// keeping the lexicographically least leaf and pruning with the
    /// automorphisms discovered on the way. Orders above 32 throw RangeError.
    auto canonical_form(const Graph & g) -> CanonicalForm;

    /// canonical label of every vertex, in the same search as canonical_form
    auto canonical_labelling(const Graph & g) -> std::vector<Vertex>;

    auto is_isomorphic(const Graph & g, const Graph & h) -> bool;
}
