#pragma once

#include <pdom/graph.hpp>

namespace pdom
{
    /// What a vertex set S dominates.
    struct CoverageView
    {
        VertexSet closed;      ///< N[S]
        VertexSet boundary;    ///< N[S] \ S
        VertexSet undominated; ///< V \ N[S]
        int dom_count = 0;     ///< |N[S]|
    };

    auto closed_neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet;

    auto cover(const Graph & g, const VertexSet & s) -> CoverageView;

    auto is_dominating(const Graph & g, const VertexSet & s) -> bool;

    /// Closed neighbourhoods of the members are pairwise disjoint.
    auto is_packing(const Graph & g, const VertexSet & s) -> bool;
}
