#include <pdom/catalog.hpp>
#include <pdom/classify.hpp>
#include <pdom/isomorphism.hpp>

#include <support/oracle.hpp>

#include <doctest.h>

using namespace pdom;

TEST_CASE("catalog graphs have their advertised shape")
{
    struct Expect
    {
        NamedGraphId id;
        int order;
        int gamma;
    };
    for (auto e : {Expect{NamedGraphId::A1, 8, 3}, Expect{NamedGraphId::A2, 8, 3}, Expect{NamedGraphId::G14_1, 14, 5},
             Expect{NamedGraphId::G14_2, 14, 5}, Expect{NamedGraphId::G14_3, 14, 5}, Expect{NamedGraphId::P7_2, 14, 5},
             Expect{NamedGraphId::Petersen, 10, 3}, Expect{NamedGraphId::K4, 4, 1}}) {
        auto g = named_graph(e.id);
        auto c = classify(g);
        CAPTURE(name_of(e.id));
        CHECK(g.order() == e.order);
        CHECK(c.is_cubic);
        CHECK(c.is_connected);
        CHECK(oracle::gamma(g) == e.gamma);
    }
}

TEST_CASE("the four order-14 extremal graphs are pairwise non-isomorphic")
{
    for (auto a : order14_extremal_graphs)
        for (auto b : order14_extremal_graphs)
            CHECK(is_isomorphic(named_graph(a), named_graph(b)) == (a == b));
}

TEST_CASE("names round trip")
{
    for (auto id : all_named_graphs)
        CHECK(named_graph_id(name_of(id)) == id);
    CHECK_FALSE(named_graph_id("nope").has_value());
}

TEST_CASE("A1 is the eight-cycle with its four long diagonals")
{
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i) {
        edges.emplace_back(i, (i + 1) % 8);
        if (i < 4)
            edges.emplace_back(i, i + 4);
    }
    CHECK(is_isomorphic(named_graph(NamedGraphId::A1), Graph(8, edges)));
}
