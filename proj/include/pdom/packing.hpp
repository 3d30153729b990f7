#pragma once

#include <pdom/certificate.hpp>
#include <pdom/graph.hpp>
#include <pdom/search_limits.hpp>

namespace pdom
{
    /// Maximum packing, found as a maximum independent set of square_graph(g).
    auto rho_exact(const Graph & g, const SearchLimits & limits = {}) -> Certificate;

    /**
     * Maximum independent set by branch and bound. Branches on the closed
     * neighbourhood of a minimum-degree candidate (some member of it lies in
     * every maximal independent set) and bounds with a greedy clique cover.
     */
    auto maximum_independent_set(const Graph & g, const SearchLimits & limits = {}) -> VertexSet;
}
