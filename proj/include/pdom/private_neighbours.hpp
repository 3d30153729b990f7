#pragma once

#include <pdom/graph.hpp>

#include <map>

namespace pdom
{
    /// pn[v, D] = {w : N[w] ∩ D = {v}} and epn[v, D] = pn[v, D] \ D.
    struct PrivateNeighbourhood
    {
        VertexSet pn;
        VertexSet epn;
    };

    /// Private and external private neighbourhoods of every member of d. d must be nonempty.
    auto private_neighborhoods(const Graph & g, const VertexSet & d) -> std::map<Vertex, PrivateNeighbourhood>;

    /// First member of d (by index) with no external private neighbour, or -1.
    auto first_without_external_private_neighbour(const Graph & g, const VertexSet & d) -> Vertex;

    struct SwapNormalisation
    {
        VertexSet set;
        int iterations = 0;
        bool converged = false;
    };

    /**
     * Rewrite a dominating set until every member has an external private
     * neighbour. Each step either drops the lowest member whose private
     * neighbourhood is empty, or takes the lowest member v with no external
     * private neighbour (so pn[v, D] = {v} and v has no neighbour in D) and
     * replaces it by its lowest-index neighbour. A swap keeps D dominating
     * and strictly increases the number of edges inside D, so the loop ends
     * within |E| swaps; iteration_cap only guards against misuse.
     */
    auto normalise_by_swaps(const Graph & g, VertexSet d, int iteration_cap) -> SwapNormalisation;

    /**
     * Bollobás–Cockayne normal form: a dominating set of the same size in
     * which every member has an external private neighbour. d must be a
     * minimum dominating set of a graph without isolated vertices; minimality
     * is checked with gamma_exact for orders up to 40 and trusted above.
     * Falls back to exhaustive search over all minimum dominating sets when
     * the swap loop hits its n^2 cap and n <= 20.
     */
    auto bc_normalize(const Graph & g, const VertexSet & d) -> VertexSet;
}
