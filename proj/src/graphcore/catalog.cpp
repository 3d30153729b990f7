#include <pdom/catalog.hpp>
#include <pdom/errors.hpp>
#include <pdom/generators.hpp>

#include <vector>

using std::optional;
using std::string_view;
using std::vector;

namespace pdom
{
    namespace
    {
        // Vertices u1..u8 are 0..7.
        auto eight_cycle_with_chords(std::initializer_list<Edge> chords) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < 8; ++i)
                edges.emplace_back(i, (i + 1) % 8);
            for (auto [a, b] : chords)
                edges.emplace_back(a - 1, b - 1);
            return Graph(8, edges);
        }

        // x1..x6 -> 0..5, y1..y6 -> 6..11, v1 -> 12, v2 -> 13.
        auto x(int i) -> Vertex { return i - 1; }
        auto y(int i) -> Vertex { return 5 + i; }
        constexpr Vertex v1 = 12, v2 = 13;

        auto cycle_edges(vector<Edge> & edges, std::initializer_list<Vertex> cycle) -> void
        {
            auto it = cycle.begin();
            for (std::size_t i = 0; i < cycle.size(); ++i)
                edges.emplace_back(it[i], it[(i + 1) % cycle.size()]);
        }

        auto g14_1() -> Graph
        {
            vector<Edge> edges;
            cycle_edges(edges, {x(1), y(1), x(2), y(2)});
            cycle_edges(edges, {x(3), y(3), x(4), y(4)});
            cycle_edges(edges, {x(5), y(5), x(6), y(6)});
            for (auto w : {y(1), y(2), y(3)})
                edges.emplace_back(v1, w);
            for (auto w : {y(4), y(5), y(6)})
                edges.emplace_back(v2, w);
            edges.insert(edges.end(), {{x(1), x(6)}, {x(2), x(3)}, {x(4), x(5)}});
            return Graph(14, edges);
        }

        auto g14_2() -> Graph
        {
            vector<Edge> edges;
            cycle_edges(edges, {x(1), y(1), x(2), y(2)});
            cycle_edges(edges, {x(3), y(3), x(4), y(4), x(5), y(5), x(6), y(6)});
            for (auto w : {y(1), y(3), y(4)})
                edges.emplace_back(v1, w);
            for (auto w : {y(2), y(5), y(6)})
                edges.emplace_back(v2, w);
            edges.insert(edges.end(), {{x(1), x(6)}, {x(2), x(4)}, {x(3), x(5)}});
            return Graph(14, edges);
        }

        // 7-cycle y1..y7 on 0..6, x_i = 6 + i, spokes x_i y_i.
        auto g14_3() -> Graph
        {
            auto cy = [](int i) { return i - 1; };
            auto cx = [](int i) { return 6 + i; };
            vector<Edge> edges;
            for (int i = 1; i <= 7; ++i) {
                edges.emplace_back(cy(i), cy(i % 7 + 1));
                edges.emplace_back(cx(i), cy(i));
            }
            edges.emplace_back(cx(1), cx(2));
            edges.emplace_back(cx(6), cx(7));
            for (int i = 1; i <= 5; ++i)
                edges.emplace_back(cx(i), cx(i + 2));
            return Graph(14, edges);
        }

        constexpr std::array names{"A1", "A2", "G14_1", "G14_2", "G14_3", "P7_2", "Petersen", "K4"};
    }

    auto named_graph(NamedGraphId id) -> Graph
    {
        switch (id) {
        case NamedGraphId::A1:
            return eight_cycle_with_chords({{1, 5}, {2, 6}, {3, 7}, {4, 8}});
        case NamedGraphId::A2:
            return eight_cycle_with_chords({{6, 8}, {3, 7}, {1, 4}, {2, 5}});
        case NamedGraphId::G14_1:
            return g14_1();
        case NamedGraphId::G14_2:
            return g14_2();
        case NamedGraphId::G14_3:
            return g14_3();
        case NamedGraphId::P7_2:
            return generalized_petersen(7, 2);
        case NamedGraphId::Petersen:
            return generalized_petersen(5, 2);
        case NamedGraphId::K4:
            return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        }
        throw RangeError("unknown named graph");
    }

    auto name_of(NamedGraphId id) -> string_view
    {
        return names.at(static_cast<std::size_t>(id));
    }

    auto named_graph_id(string_view name) -> optional<NamedGraphId>
    {
        for (auto id : all_named_graphs)
            if (name_of(id) == name)
                return id;
        return std::nullopt;
    }
}
