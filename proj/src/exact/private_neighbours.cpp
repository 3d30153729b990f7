#include <pdom/coverage.hpp>
#include <pdom/domination.hpp>
#include <pdom/errors.hpp>
#include <pdom/private_neighbours.hpp>

#include <optional>
#include <string>
#include <vector>

using std::map;
using std::optional;
using std::to_string;
using std::vector;

namespace pdom
{
    namespace
    {
        constexpr int exact_check_limit = 40;
        constexpr int exhaustive_fallback_limit = 20;

        auto private_neighbourhood_of(const Graph & g, const VertexSet & d, Vertex v) -> VertexSet
        {
            auto pn = g.empty_set();
            for (auto w : g.closed_neighbours(v))
                if (g.closed_neighbours(w).intersection_count(d) == 1)
                    pn.insert(w);
            return pn;
        }

        auto all_have_external_private_neighbours(const Graph & g, const VertexSet & d) -> bool
        {
            return first_without_external_private_neighbour(g, d) < 0;
        }

        /// Lexicographically first k-subset that dominates and satisfies the epn property.
        auto exhaustive_normal_form(const Graph & g, int k) -> optional<VertexSet>
        {
            vector<int> pick(k);
            for (int i = 0; i < k; ++i)
                pick[i] = i;
            while (true) {
                auto candidate = g.empty_set();
                for (auto v : pick)
                    candidate.insert(v);
                if (is_dominating(g, candidate) && all_have_external_private_neighbours(g, candidate))
                    return candidate;
                int i = k - 1;
                while (i >= 0 && pick[i] == g.order() - k + i)
                    --i;
                if (i < 0)
                    return std::nullopt;
                ++pick[i];
                for (int j = i + 1; j < k; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
    }

    auto private_neighborhoods(const Graph & g, const VertexSet & d) -> map<Vertex, PrivateNeighbourhood>
    {
        if (d.empty())
            throw PreconditionError("private neighbourhoods need a nonempty set");
        map<Vertex, PrivateNeighbourhood> result;
        for (auto v : d) {
            auto pn = private_neighbourhood_of(g, d, v);
            result.emplace(v, PrivateNeighbourhood{pn, pn - d});
        }
        return result;
    }

    auto first_without_external_private_neighbour(const Graph & g, const VertexSet & d) -> Vertex
    {
        for (auto v : d)
            if ((private_neighbourhood_of(g, d, v) - d).empty())
                return v;
        return -1;
    }

    auto normalise_by_swaps(const Graph & g, VertexSet d, int iteration_cap) -> SwapNormalisation
    {
        SwapNormalisation result{d, 0, false};
        while (result.iterations < iteration_cap) {
            Vertex redundant = -1, stuck = -1;
            for (auto v : result.set) {
                auto pn = private_neighbourhood_of(g, result.set, v);
                if (pn.empty()) {
                    redundant = v;
                    break;
                }
                if (stuck < 0 && (pn - result.set).empty())
                    stuck = v;
            }
            if (redundant >= 0)
                result.set.erase(redundant);
            else if (stuck >= 0) {
                result.set.erase(stuck);
                result.set.insert(g.neighbours(stuck).first());
            }
            else {
                result.converged = true;
                return result;
            }
            ++result.iterations;
        }
        return result;
    }

    auto bc_normalize(const Graph & g, const VertexSet & d) -> VertexSet
    {
        if (g.min_degree() == 0)
            throw PreconditionError("graph has an isolated vertex");
        if (d.width() != g.order())
            throw PreconditionError("vertex set width does not match graph order");
        if (! is_dominating(g, d))
            throw PreconditionError("set " + d.to_string() + " is not dominating");
        if (g.order() <= exact_check_limit) {
            int gamma = gamma_exact(g).value;
            if (d.count() != gamma)
                throw PreconditionError("dominating set of size " + to_string(d.count()) +
                    " is not minimum (domination number " + to_string(gamma) + ")");
        }

        int cap = g.order() * g.order();
        auto swapped = normalise_by_swaps(g, d, cap);
        if (swapped.converged && swapped.set.count() == d.count())
            return swapped.set;
        if (g.order() <= exhaustive_fallback_limit)
            if (auto found = exhaustive_normal_form(g, d.count()))
                return *found;
        throw Error("private-neighbour normalisation did not converge within " + to_string(cap) + " steps");
    }
}
