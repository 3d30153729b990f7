#pragma once

#include <pdom/alpha.hpp>
#include <pdom/certificate.hpp>
#include <pdom/graph.hpp>
#include <pdom/search_limits.hpp>

namespace pdom
{
    /**
     * Minimum dominating set by iterative deepening: the budget starts at a
     * counting lower bound and rises until a dominating set of that size is
     * found, or until it reaches the greedy upper bound. Each round branches
     * on the undominated vertex with the fewest admissible dominators and
     * prunes when the best remaining marginal gains cannot cover what is left.
     * Practical up to about 40 vertices on cubic graphs.
     */
    auto gamma_exact(const Graph & g, const SearchLimits & limits = {}) -> Certificate;

    /// Minimum alpha-partial dominating set: the least |S| with |N[S]| >= alpha.required(n).
    auto pd_exact(const Graph & g, const AlphaThreshold & alpha, const SearchLimits & limits = {}) -> Certificate;

    /// Least |S| with |N[S]| >= required, for 1 <= required <= n.
    auto min_partial_dominating(const Graph & g, int required, const SearchLimits & limits = {}) -> Certificate;

    /**
     * Greedy dominating set: repeatedly add the vertex of largest marginal
     * coverage (lowest index on ties), then drop redundant members in index
     * order. The result is a minimal dominating set.
     */
    auto greedy_dominating_set(const Graph & g) -> VertexSet;
}
