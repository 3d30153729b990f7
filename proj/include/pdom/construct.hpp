#pragma once

#include <pdom/alpha.hpp>
#include <pdom/errors.hpp>
#include <pdom/graph.hpp>

#include <json.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace pdom
{
    /**
     * Growth step for a partial dominating set S in a graph of minimum degree
     * at least 3. Let U = V \ N[S]. Returns the lowest-index vertex x of
     * ∂(S) ∪ U maximising |N[x] ∩ U|. When 4|U| > k(n - |S|) that vertex is
     * guaranteed to cover at least k + 1 vertices of U; otherwise it is
     * returned only if it happens to, and nullopt is returned instead.
     * Throws PreconditionError unless g has minimum degree at least 3.
     */
    auto lemma_extend(const Graph & g, const VertexSet & s, int k) -> std::optional<Vertex>;

    struct GreedyPartialResult
    {
        VertexSet witness;
        int coverage = 0;
        bool achieved = false;
        bool used_exact_fallback = false;
        std::vector<int> staged_coverage; ///< coverage after each greedy addition
    };

    /**
     * Add the lowest-index vertex of largest marginal coverage until the
     * budget is spent, the target is met or nothing new can be dominated.
     * For orders up to 14 a run that misses the target is retried with the
     * exact partial domination solver.
     */
    auto greedy_partial(const Graph & g, int budget, int target) -> GreedyPartialResult;

    struct Part
    {
        Vertex center;
        VertexSet members;
    };

    /// V split by a dominating set: parts sorted by size descending, then centre ascending.
    struct Partition
    {
        std::vector<Part> parts;
    };

    /**
     * Part i holds its centre v_i, the external private neighbours of v_i,
     * and every other non-member whose lowest-index neighbour in d is v_i.
     * Every member of d must have an external private neighbour.
     */
    auto build_partition(const Graph & g, const VertexSet & d) -> Partition;

    enum class ConstructRegime
    {
        Generic78, ///< alpha = 7/8, minimum degree >= 3
        Cubic1314, ///< alpha = 13/14, connected cubic, n >= 28
        Super910   ///< alpha = 9/10, minimum degree >= 3, n >= 60
    };

    auto regime_name(ConstructRegime regime) -> std::string_view;
    auto parse_regime(std::string_view name) -> std::optional<ConstructRegime>;
    auto regime_alpha(ConstructRegime regime) -> AlphaThreshold;

    /// Largest dominating set size the regime's coverage argument can absorb:
    /// floor(5n/14) for Cubic1314, floor(3n/8) otherwise.
    auto regime_gamma_bound(ConstructRegime regime, int n) -> int;

    /// Why the regime does not apply to g, or nullopt when it does.
    auto regime_violation(ConstructRegime regime, const Graph & g) -> std::optional<std::string>;

    /// The dominating set exceeded the regime's size bound.
    class GammaGateError : public Error
    {
    public:
        using Error::Error;
    };

    enum class ConstructPath
    {
        ExactSmall,     ///< n <= 14: exact partial domination
        DominatingSet,  ///< the dominating set itself has at most floor(n/3) members
        LargestParts    ///< centres of the floor(n/3) largest parts
    };

    struct Construction
    {
        ConstructRegime regime;
        ConstructPath path;
        VertexSet witness;
        int value = 0;
        int coverage = 0;
        int dominating_set_size = 0;
        /// True when the dominating set used was proven minimum (or the exact
        /// small-order path was taken), false when a heuristic set passed the gate.
        bool guarantee_chain_verified = false;
    };

    /**
     * At most floor(n/3) vertices dominating at least alpha*n vertices. Orders
     * up to 14 use the exact solver. Otherwise a minimum dominating set (exact
     * up to 40 vertices, greedy beyond) is normalised so each member has an
     * external private neighbour; if it is small enough it is returned as is,
     * else it must pass the regime's size gate and the centres of the largest
     * floor(n/3) parts of its partition are returned.
     */
    auto one_third_construct(const Graph & g, ConstructRegime regime) -> Construction;

    /// Certificate fields plus "regime" and "guarantee_chain_verified".
    auto to_json(const Construction & construction) -> nlohmann::ordered_json;
}
