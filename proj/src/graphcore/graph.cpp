#include <pdom/errors.hpp>
#include <pdom/graph.hpp>

#include <algorithm>
#include <string>

using std::to_string;
using std::vector;

namespace pdom
{
    Graph::Graph(int order, const vector<Edge> & edges)
    {
        if (order < 1 || order > max_order)
            throw RangeError("graph order " + to_string(order) + " outside [1, 1024]");

        _open.assign(order, VertexSet(order));
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= order || b >= order)
                throw RangeError("edge (" + to_string(a) + ", " + to_string(b) + ") outside the vertex range");
            if (a == b)
                throw PreconditionError("loop at vertex " + to_string(a));
            _open[a].insert(b);
            _open[b].insert(a);
        }

        _closed = _open;
        _degree.resize(order);
        _min_degree = order;
        _max_degree = 0;
        int degree_sum = 0;
        for (Vertex v = 0; v < order; ++v) {
            _closed[v].insert(v);
            _degree[v] = _open[v].count();
            degree_sum += _degree[v];
            _min_degree = std::min(_min_degree, _degree[v]);
            _max_degree = std::max(_max_degree, _degree[v]);
        }
        _edge_count = degree_sum / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex a = 0; a < order(); ++a)
            for (auto b : _open[a])
                if (b > a)
                    result.emplace_back(a, b);
        return result;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        for (auto [x, y] : b.edges())
            edges.emplace_back(x + a.order(), y + a.order());
        return Graph(a.order() + b.order(), edges);
    }

    auto relabel(const Graph & g, const vector<Vertex> & permutation) -> Graph
    {
        if (static_cast<int>(permutation.size()) != g.order())
            throw RangeError("permutation length does not match graph order");
        vector<bool> seen(g.order(), false);
        for (auto p : permutation) {
            if (p < 0 || p >= g.order() || seen[p])
                throw PreconditionError("relabelling is not a permutation");
            seen[p] = true;
        }
        vector<Edge> edges;
        for (auto [x, y] : g.edges())
            edges.emplace_back(permutation[x], permutation[y]);
        return Graph(g.order(), edges);
    }

    auto square_graph(const Graph & g) -> Graph
    {
        vector<Edge> edges;
        for (Vertex v = 0; v < g.order(); ++v) {
            auto reach = g.closed_neighbours(v);
            for (auto w : g.neighbours(v))
                reach |= g.neighbours(w);
            for (auto w : reach)
                if (w > v)
                    edges.emplace_back(v, w);
        }
        return Graph(g.order(), edges);
    }
}
