#include <pdom/coverage.hpp>
#include <pdom/domination.hpp>
#include <pdom/errors.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

using std::optional;
using std::vector;

namespace pdom
{
    namespace
    {
        struct Candidate
        {
            int gain;
            Vertex v;
        };

        /// Candidates by gain descending, index ascending.
        auto by_gain(const Candidate & a, const Candidate & b) -> bool
        {
            return a.gain != b.gain ? a.gain > b.gain : a.v < b.v;
        }

        class DominationSearch
        {
        public:
            DominationSearch(const Graph & g, int required, const SearchLimits & limits) :
                _g(g),
                _required(required),
                _check(limits),
                _chosen(g.empty_set()),
                _dominated(g.empty_set()),
                _forbidden(g.empty_set())
            {
            }

            /// Is there a set of at most `budget` vertices reaching the requirement?
            auto exists(int budget) -> optional<VertexSet>
            {
                _chosen = _dominated = _forbidden = _g.empty_set();
                _found.reset();
                if (_required == _g.order())
                    full(budget);
                else
                    partial(budget);
                return _found;
            }

        private:
            /// Sum of the `budget` largest marginal gains over admissible vertices.
            auto gain_bound(const VertexSet & undominated, int budget) -> int
            {
                _gains.clear();
                auto admissible = _g.vertices() - _forbidden - _chosen;
                for (auto v : admissible)
                    if (int gain = _g.closed_neighbours(v).intersection_count(undominated); gain > 0)
                        _gains.push_back(gain);
                if (static_cast<int>(_gains.size()) > budget)
                    std::nth_element(_gains.begin(), _gains.begin() + budget, _gains.end(), std::greater<>());
                int total = 0;
                for (int i = 0; i < std::min<int>(budget, _gains.size()); ++i)
                    total += _gains[i];
                return total;
            }

            auto full(int budget) -> bool
            {
                _check.tick();
                auto undominated = _g.vertices() - _dominated;
                int missing = undominated.count();
                if (missing == 0) {
                    _found = _chosen;
                    return true;
                }
                if (budget == 0 || budget * (_g.max_degree() + 1) < missing)
                    return false;
                if (gain_bound(undominated, budget) < missing)
                    return false;

                Vertex pivot = -1;
                int pivot_options = _g.order() + 1;
                for (auto u : undominated) {
                    int options = (_g.closed_neighbours(u) - _forbidden).count();
                    if (options < pivot_options) {
                        pivot = u;
                        pivot_options = options;
                        if (options <= 1)
                            break;
                    }
                }
                if (pivot_options == 0)
                    return false;

                vector<Candidate> options;
                for (auto c : _g.closed_neighbours(pivot) - _forbidden)
                    options.push_back({_g.closed_neighbours(c).intersection_count(undominated), c});
                std::sort(options.begin(), options.end(), by_gain);

                auto saved_forbidden = _forbidden;
                bool success = false;
                for (auto [gain, c] : options) {
                    auto saved_dominated = _dominated;
                    _chosen.insert(c);
                    _dominated |= _g.closed_neighbours(c);
                    success = full(budget - 1);
                    _chosen.erase(c);
                    _dominated = saved_dominated;
                    if (success)
                        break;
                    _forbidden.insert(c);
                }
                _forbidden = saved_forbidden;
                return success;
            }

            auto partial(int budget) -> bool
            {
                _check.tick();
                int covered = _dominated.count();
                if (covered >= _required) {
                    _found = _chosen;
                    return true;
                }
                if (budget == 0)
                    return false;
                auto undominated = _g.vertices() - _dominated;
                if (covered + gain_bound(undominated, budget) < _required)
                    return false;

                Candidate best{0, -1};
                for (auto v : _g.vertices() - _forbidden - _chosen) {
                    Candidate c{_g.closed_neighbours(v).intersection_count(undominated), v};
                    if (by_gain(c, best))
                        best = c;
                }
                if (best.gain == 0)
                    return false;

                auto saved_dominated = _dominated;
                _chosen.insert(best.v);
                _dominated |= _g.closed_neighbours(best.v);
                bool success = partial(budget - 1);
                _chosen.erase(best.v);
                _dominated = saved_dominated;
                if (success)
                    return true;

                _forbidden.insert(best.v);
                success = partial(budget);
                _forbidden.erase(best.v);
                return success;
            }

            const Graph & _g;
            int _required;
            DeadlineCheck _check;
            VertexSet _chosen, _dominated, _forbidden;
            optional<VertexSet> _found;
            vector<int> _gains;
        };

        /// Greedy by marginal coverage until `required` vertices are dominated.
        auto greedy_cover(const Graph & g, int required) -> VertexSet
        {
            auto chosen = g.empty_set();
            auto dominated = g.empty_set();
            while (dominated.count() < required) {
                Candidate best{0, -1};
                auto undominated = g.vertices() - dominated;
                for (Vertex v = 0; v < g.order(); ++v) {
                    Candidate c{g.closed_neighbours(v).intersection_count(undominated), v};
                    if (by_gain(c, best))
                        best = c;
                }
                chosen.insert(best.v);
                dominated |= g.closed_neighbours(best.v);
            }
            return chosen;
        }

        /// Smallest k whose k largest closed neighbourhoods could reach `required`.
        auto counting_lower_bound(const Graph & g, int required) -> int
        {
            vector<int> sizes;
            for (Vertex v = 0; v < g.order(); ++v)
                sizes.push_back(g.degree(v) + 1);
            std::sort(sizes.begin(), sizes.end(), std::greater<>());
            int total = 0, k = 0;
            while (total < required)
                total += sizes[k++];
            return k;
        }

        auto solve(const Graph & g, int required, CertificateKind kind, const SearchLimits & limits) -> Certificate
        {
            auto upper = kind == CertificateKind::Gamma ? greedy_dominating_set(g) : greedy_cover(g, required);
            DominationSearch search(g, required, limits);
            auto witness = upper;
            for (int budget = counting_lower_bound(g, required); budget < upper.count(); ++budget)
                if (auto found = search.exists(budget)) {
                    witness = *found;
                    break;
                }
            return Certificate{kind, witness, witness.count(), closed_neighbourhood(g, witness).count()};
        }
    }

    auto greedy_dominating_set(const Graph & g) -> VertexSet
    {
        auto chosen = greedy_cover(g, g.order());
        for (auto v : chosen.members()) {
            auto without = chosen;
            without.erase(v);
            if (is_dominating(g, without))
                chosen = without;
        }
        return chosen;
    }

    auto gamma_exact(const Graph & g, const SearchLimits & limits) -> Certificate
    {
        return solve(g, g.order(), CertificateKind::Gamma, limits);
    }

    auto min_partial_dominating(const Graph & g, int required, const SearchLimits & limits) -> Certificate
    {
        if (required < 1 || required > g.order())
            throw RangeError("coverage requirement " + std::to_string(required) + " outside [1, " +
                std::to_string(g.order()) + "]");
        return solve(g, required, CertificateKind::PartialDom, limits);
    }

    auto pd_exact(const Graph & g, const AlphaThreshold & alpha, const SearchLimits & limits) -> Certificate
    {
        return min_partial_dominating(g, alpha.required(g.order()), limits);
    }
}
