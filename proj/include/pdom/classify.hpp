#pragma once

#include <pdom/graph.hpp>

#include <optional>
#include <vector>

namespace pdom
{
    struct GraphClass
    {
        int order = 0;
        int min_degree = 0;
        int max_degree = 0;
        bool is_cubic = false;
        bool is_supercubic = false;
        bool is_connected = false;
        std::optional<int> girth; ///< nullopt for forests

        auto operator==(const GraphClass &) const -> bool = default;
    };

    auto classify(const Graph & g) -> GraphClass;

    auto is_connected(const Graph & g) -> bool;

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    auto girth(const Graph & g) -> std::optional<int>;

    /// BFS distances from source; -1 for unreachable vertices.
    auto distances_from(const Graph & g, Vertex source) -> std::vector<int>;
}
