#include <pdom/coverage.hpp>

namespace pdom
{
    auto closed_neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet
    {
        auto result = g.empty_set();
        for (auto v : s)
            result |= g.closed_neighbours(v);
        return result;
    }

    auto cover(const Graph & g, const VertexSet & s) -> CoverageView
    {
        CoverageView view;
        view.closed = closed_neighbourhood(g, s);
        view.boundary = view.closed - s;
        view.undominated = view.closed.complement();
        view.dom_count = view.closed.count();
        return view;
    }

    auto is_dominating(const Graph & g, const VertexSet & s) -> bool
    {
        return closed_neighbourhood(g, s).count() == g.order();
    }

    auto is_packing(const Graph & g, const VertexSet & s) -> bool
    {
        auto seen = g.empty_set();
        for (auto v : s) {
            if (seen.intersects(g.closed_neighbours(v)))
                return false;
            seen |= g.closed_neighbours(v);
        }
        return true;
    }
}
