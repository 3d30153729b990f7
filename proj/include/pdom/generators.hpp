#pragma once

#include <pdom/graph.hpp>

#include <cstdint>
#include <vector>

namespace pdom
{
    /**
     * Generalized Petersen graph P(p, k): outer cycle u_0..u_{p-1} on vertices
     * 0..p-1, inner vertices w_i = p + i, spokes u_i w_i and inner edges
     * w_i w_{i+k mod p}. Requires p >= 3 and 1 <= k < p/2.
     */
    auto generalized_petersen(int p, int k) -> Graph;

    /**
     * Same construction without the k < p/2 restriction (1 <= k < p). When
     * 2k = p the inner edges form a perfect matching and the result is not
     * cubic; P(p, k) and P(p, p - k) coincide.
     */
    auto generalized_petersen_unrestricted(int p, int k) -> Graph;

    /**
     * Random simple cubic graph from the pairing (configuration) model with
     * rejection of loops and repeated edges, driven by Rng(seed). With
     * require_connected the generator keeps drawing from the same stream until
     * the graph is connected. Requires n even and n >= 4.
     */
    auto random_cubic(int n, std::uint64_t seed, bool require_connected) -> Graph;

    /**
     * Random graph with minimum degree at least 3: a pairing-model graph in
     * which every vertex has degree 3 (one vertex of degree 4 when n is odd),
     * plus extra_edges further edges between uniformly drawn non-adjacent
     * pairs. Requires n >= 5 for odd n and n >= 4 otherwise.
     */
    auto random_supercubic(int n, std::uint64_t seed, int extra_edges, bool require_connected) -> Graph;

    /// Uniformly random permutation of 0..n-1 from Rng(seed).
    auto random_permutation(int n, std::uint64_t seed) -> std::vector<int>;
}
