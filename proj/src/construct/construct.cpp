#include <pdom/classify.hpp>
#include <pdom/construct.hpp>
#include <pdom/coverage.hpp>
#include <pdom/domination.hpp>
#include <pdom/private_neighbours.hpp>

#include <algorithm>
#include <array>
#include <string>

using std::optional;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace pdom
{
    namespace
    {
        constexpr int small_order = 14;
        constexpr int exact_gamma_order = 40;

        auto require_supercubic(const Graph & g) -> void
        {
            if (g.min_degree() < 3)
                throw PreconditionError("graph has minimum degree " + to_string(g.min_degree()) + ", need at least 3");
        }

        constexpr std::array regime_names{"generic78", "cubic1314", "super910"};
    }

    auto lemma_extend(const Graph & g, const VertexSet & s, int k) -> optional<Vertex>
    {
        require_supercubic(g);
        if (k < 1)
            throw RangeError("k must be positive");
        auto view = cover(g, s);
        auto candidates = view.boundary | view.undominated;

        Vertex best = -1;
        int best_gain = -1;
        for (auto x : candidates) {
            int gain = g.closed_neighbours(x).intersection_count(view.undominated);
            if (gain > best_gain) {
                best = x;
                best_gain = gain;
            }
        }
        if (best < 0 || best_gain < k + 1)
            return std::nullopt;
        return best;
    }

    auto greedy_partial(const Graph & g, int budget, int target) -> GreedyPartialResult
    {
        require_supercubic(g);
        if (budget < 0)
            throw RangeError("budget must be nonnegative");

        GreedyPartialResult result{g.empty_set(), 0, false, false, {}};
        auto dominated = g.empty_set();
        while (static_cast<int>(result.staged_coverage.size()) < budget && result.coverage < target) {
            auto undominated = g.vertices() - dominated;
            Vertex best = -1;
            int best_gain = 0;
            for (Vertex v = 0; v < g.order(); ++v)
                if (int gain = g.closed_neighbours(v).intersection_count(undominated); gain > best_gain) {
                    best = v;
                    best_gain = gain;
                }
            if (best < 0)
                break;
            result.witness.insert(best);
            dominated |= g.closed_neighbours(best);
            result.coverage = dominated.count();
            result.staged_coverage.push_back(result.coverage);
        }
        result.achieved = result.coverage >= target;

        if (! result.achieved && g.order() <= small_order && target <= g.order()) {
            auto exact = min_partial_dominating(g, target);
            if (exact.value <= budget) {
                result.witness = exact.witness;
                result.coverage = exact.coverage;
                result.achieved = true;
                result.used_exact_fallback = true;
            }
        }
        return result;
    }

    auto build_partition(const Graph & g, const VertexSet & d) -> Partition
    {
        if (d.empty() || ! is_dominating(g, d))
            throw PreconditionError("partition needs a dominating set");
        auto neighbourhoods = private_neighborhoods(g, d);

        Partition partition;
        vector<int> part_of(g.order(), -1);
        for (auto & [v, private_sets] : neighbourhoods) {
            if (private_sets.epn.empty())
                throw PreconditionError("vertex " + to_string(v) + " has no external private neighbour");
            auto members = private_sets.epn;
            members.insert(v);
            for (auto w : members)
                part_of[w] = static_cast<int>(partition.parts.size());
            partition.parts.push_back(Part{v, members});
        }
        for (Vertex w = 0; w < g.order(); ++w)
            if (part_of[w] < 0) {
                auto dominator = (g.neighbours(w) & d).first();
                auto it = std::find_if(partition.parts.begin(), partition.parts.end(),
                    [&](const Part & p) { return p.center == dominator; });
                it->members.insert(w);
                part_of[w] = static_cast<int>(it - partition.parts.begin());
            }

        std::stable_sort(partition.parts.begin(), partition.parts.end(), [](const Part & a, const Part & b) {
            auto sa = a.members.count(), sb = b.members.count();
            return sa != sb ? sa > sb : a.center < b.center;
        });
        return partition;
    }

    auto regime_name(ConstructRegime regime) -> string_view
    {
        return regime_names.at(static_cast<std::size_t>(regime));
    }

    auto parse_regime(string_view name) -> optional<ConstructRegime>
    {
        for (std::size_t i = 0; i < regime_names.size(); ++i)
            if (regime_names[i] == name)
                return static_cast<ConstructRegime>(i);
        return std::nullopt;
    }

    auto regime_alpha(ConstructRegime regime) -> AlphaThreshold
    {
        switch (regime) {
        case ConstructRegime::Generic78:
            return AlphaThreshold(7, 8);
        case ConstructRegime::Cubic1314:
            return AlphaThreshold(13, 14);
        case ConstructRegime::Super910:
            return AlphaThreshold(9, 10);
        }
        throw RangeError("unknown regime");
    }

    auto regime_gamma_bound(ConstructRegime regime, int n) -> int
    {
        return regime == ConstructRegime::Cubic1314 ? 5 * n / 14 : 3 * n / 8;
    }

    auto regime_violation(ConstructRegime regime, const Graph & g) -> optional<string>
    {
        if (g.min_degree() < 3)
            return "minimum degree " + to_string(g.min_degree()) + " is below 3";
        switch (regime) {
        case ConstructRegime::Generic78:
            return std::nullopt;
        case ConstructRegime::Cubic1314:
            if (g.max_degree() != 3)
                return string("graph is not cubic");
            if (! is_connected(g))
                return string("graph is not connected");
            if (g.order() < 28)
                return "order " + to_string(g.order()) + " is below 28";
            return std::nullopt;
        case ConstructRegime::Super910:
            if (g.order() < 60)
                return "order " + to_string(g.order()) + " is below 60";
            return std::nullopt;
        }
        return string("unknown regime");
    }

    auto one_third_construct(const Graph & g, ConstructRegime regime) -> Construction
    {
        if (auto why = regime_violation(regime, g))
            throw PreconditionError(string(regime_name(regime)) + " does not apply: " + *why);

        int n = g.order();
        int budget = n / 3;
        auto alpha = regime_alpha(regime);
        Construction result{regime, ConstructPath::ExactSmall, g.empty_set(), 0, 0, 0, false};

        auto finish = [&](const VertexSet & witness) {
            result.witness = witness;
            result.value = witness.count();
            result.coverage = closed_neighbourhood(g, witness).count();
            if (result.value > budget || ! alpha.satisfied_by(result.coverage, n))
                throw Error("construction produced " + to_string(result.value) + " vertices covering " +
                    to_string(result.coverage) + " of " + to_string(n) + ", outside the " + alpha.to_string() +
                    " guarantee");
            return result;
        };

        if (n <= small_order) {
            auto exact = pd_exact(g, alpha);
            result.guarantee_chain_verified = true;
            return finish(exact.witness);
        }

        bool exact = n <= exact_gamma_order;
        auto dominating = exact ? gamma_exact(g).witness : greedy_dominating_set(g);
        auto normalised = normalise_by_swaps(g, dominating, n * n);
        if (! normalised.converged)
            throw Error("private-neighbour normalisation did not converge");
        auto d = normalised.set;
        result.dominating_set_size = d.count();
        result.guarantee_chain_verified = exact;

        if (d.count() <= budget) {
            result.path = ConstructPath::DominatingSet;
            return finish(d);
        }

        int gate = regime_gamma_bound(regime, n);
        if (d.count() > gate)
            throw GammaGateError("dominating set of size " + to_string(d.count()) + " exceeds the " +
                string(regime_name(regime)) + " bound " + to_string(gate) +
                (exact ? " (exact domination number)" : " (greedy dominating set)"));

        auto partition = build_partition(g, d);
        auto witness = g.empty_set();
        for (int i = 0; i < budget; ++i)
            witness.insert(partition.parts[i].center);
        result.path = ConstructPath::LargestParts;
        return finish(witness);
    }

    auto to_json(const Construction & construction) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json result;
        result["kind"] = "PartialDom";
        result["value"] = construction.value;
        result["coverage"] = construction.coverage;
        result["witness"] = construction.witness.members();
        result["regime"] = regime_name(construction.regime);
        result["guarantee_chain_verified"] = construction.guarantee_chain_verified;
        return result;
    }
}
