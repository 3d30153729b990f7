#pragma once

#include <pdom/vertex_set.hpp>

#include <utility>
#include <vector>

namespace pdom
{
    using Edge = std::pair<Vertex, Vertex>;

    /**
     * Immutable simple undirected graph on vertices 0..n-1, stored as one
     * adjacency bit-row per vertex. Closed neighbourhood rows are kept
     * alongside since every domination routine works with N[v].
     */
    class Graph
    {
    public:
        /// Edge list constructor. Repeated edges collapse; loops and
        /// out-of-range endpoints throw.
        Graph(int order, const std::vector<Edge> & edges);

        auto order() const -> int { return static_cast<int>(_open.size()); }
        auto size() const -> int { return _edge_count; }

        auto neighbours(Vertex v) const -> const VertexSet & { return _open[v]; }
        auto closed_neighbours(Vertex v) const -> const VertexSet & { return _closed[v]; }
        auto adjacent(Vertex a, Vertex b) const -> bool { return _open[a].contains(b); }
        auto degree(Vertex v) const -> int { return _degree[v]; }

        auto min_degree() const -> int { return _min_degree; }
        auto max_degree() const -> int { return _max_degree; }

        auto vertices() const -> VertexSet { return VertexSet::full(order()); }
        auto empty_set() const -> VertexSet { return VertexSet(order()); }

        /// Edges (a, b) with a < b, ordered lexicographically.
        auto edges() const -> std::vector<Edge>;

        auto operator==(const Graph & other) const -> bool { return _open == other._open; }

    private:
        std::vector<VertexSet> _open;
        std::vector<VertexSet> _closed;
        std::vector<int> _degree;
        int _edge_count = 0;
        int _min_degree = 0;
        int _max_degree = 0;
    };

    /// Disjoint union; vertices of b are shifted by a.order().
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    /// Graph with vertex v renamed to permutation[v].
    auto relabel(const Graph & g, const std::vector<Vertex> & permutation) -> Graph;

    /// i ~ j iff i != j and their distance in g is at most 2.
    auto square_graph(const Graph & g) -> Graph;
}
