#include <pdom/coverage.hpp>
#include <pdom/packing.hpp>

namespace pdom
{
    namespace
    {
        class IndependentSetSearch
        {
        public:
            IndependentSetSearch(const Graph & g, const SearchLimits & limits) :
                _g(g), _check(limits), _current(g.empty_set()), _best(g.empty_set())
            {
            }

            auto run() -> VertexSet
            {
                expand(_g.vertices());
                return _best;
            }

        private:
            /// Number of cliques in a greedy clique cover of the candidates.
            auto clique_cover_bound(VertexSet candidates) const -> int
            {
                int cliques = 0;
                while (! candidates.empty()) {
                    auto v = candidates.first();
                    auto extendable = candidates & _g.neighbours(v);
                    candidates.erase(v);
                    while (! extendable.empty()) {
                        auto w = extendable.first();
                        candidates.erase(w);
                        extendable &= _g.neighbours(w);
                    }
                    ++cliques;
                }
                return cliques;
            }

            auto expand(VertexSet candidates) -> void
            {
                _check.tick();
                if (candidates.empty()) {
                    if (_current.count() > _best.count())
                        _best = _current;
                    return;
                }
                if (_current.count() + clique_cover_bound(candidates) <= _best.count())
                    return;

                Vertex pivot = -1;
                int pivot_degree = _g.order() + 1;
                for (auto v : candidates) {
                    int degree = candidates.intersection_count(_g.neighbours(v));
                    if (degree < pivot_degree) {
                        pivot = v;
                        pivot_degree = degree;
                    }
                }

                // a vertex with at most one candidate neighbour belongs to some maximum independent set
                if (pivot_degree <= 1) {
                    _current.insert(pivot);
                    expand(candidates - _g.closed_neighbours(pivot));
                    _current.erase(pivot);
                    return;
                }

                for (auto w : candidates & _g.closed_neighbours(pivot)) {
                    _current.insert(w);
                    expand(candidates - _g.closed_neighbours(w));
                    _current.erase(w);
                    candidates.erase(w);
                }
            }

            const Graph & _g;
            DeadlineCheck _check;
            VertexSet _current, _best;
        };
    }

    auto maximum_independent_set(const Graph & g, const SearchLimits & limits) -> VertexSet
    {
        return IndependentSetSearch(g, limits).run();
    }

    auto rho_exact(const Graph & g, const SearchLimits & limits) -> Certificate
    {
        auto packing = maximum_independent_set(square_graph(g), limits);
        return Certificate{CertificateKind::Packing, packing, packing.count(), closed_neighbourhood(g, packing).count()};
    }
}
