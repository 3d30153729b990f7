#include <pdom/catalog.hpp>
#include <pdom/classify.hpp>
#include <pdom/coverage.hpp>
#include <pdom/construct.hpp>
#include <pdom/domination.hpp>
#include <pdom/errors.hpp>
#include <pdom/generators.hpp>
#include <pdom/graph6.hpp>
#include <pdom/private_neighbours.hpp>
#include <pdom/rng.hpp>

#include <support/oracle.hpp>

#include <doctest.h>

using namespace pdom;

namespace
{
    auto random_subset(int n, Rng & rng, int size) -> VertexSet
    {
        VertexSet s(n);
        while (s.count() < size)
            s.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        return s;
    }

    // Two copies of g with one edge from each exchanged across, so the result stays cubic and connected.
    auto bridged_pair(const Graph & g) -> Graph
    {
        int n = g.order();
        auto [a, b] = g.edges().front();
        std::vector<Edge> edges;
        for (auto [x, y] : g.edges())
            if (Edge{x, y} != Edge{a, b}) {
                edges.emplace_back(x, y);
                edges.emplace_back(x + n, y + n);
            }
        edges.emplace_back(a, b + n);
        edges.emplace_back(b, a + n);
        return Graph(2 * n, edges);
    }

    auto check_partition(const Graph & g, const VertexSet & d, const Partition & p) -> void
    {
        REQUIRE(static_cast<int>(p.parts.size()) == d.count());
        auto seen = g.empty_set();
        auto pn = private_neighborhoods(g, d);
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            const auto & part = p.parts[i];
            CHECK(part.members.contains(part.center));
            CHECK(pn[part.center].epn.is_subset_of(part.members));
            CHECK(part.members.is_subset_of(g.closed_neighbours(part.center)));
            CHECK(part.members.count() >= 2);
            CHECK_FALSE(part.members.intersects(seen));
            seen |= part.members;
            if (i > 0) {
                const auto & prev = p.parts[i - 1];
                CHECK(prev.members.count() >= part.members.count());
                if (prev.members.count() == part.members.count())
                    CHECK(prev.center < part.center);
            }
        }
        CHECK(seen == g.vertices());
    }
}

TEST_CASE("lemma_extend examples")
{
    auto k4 = named_graph(NamedGraphId::K4);
    CHECK(lemma_extend(k4, k4.empty_set(), 3) == 0);
    CHECK_FALSE(lemma_extend(k4, VertexSet(4, {2}), 1).has_value());

    auto a1 = named_graph(NamedGraphId::A1);
    auto s = VertexSet(8, {0});
    auto u = cover(a1, s).undominated;
    CHECK(u.count() == 4);
    auto x = lemma_extend(a1, s, 1);
    REQUIRE(x.has_value());
    CHECK(a1.closed_neighbours(*x).intersection_count(u) >= 2);

    CHECK_THROWS_AS(lemma_extend(Graph(4, {{0, 1}}), VertexSet(4), 1), PreconditionError);
    CHECK_THROWS_AS(lemma_extend(k4, k4.empty_set(), 0), RangeError);
}

TEST_CASE("lemma_extend never misses when the counting condition holds")
{
    Rng rng(2024);
    int triggered = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 8 + static_cast<int>(rng.below(33));
        auto g = random_supercubic(n, rng.next(), static_cast<int>(rng.below(4)), false);
        auto s = random_subset(n, rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 3 + 1))));
        int k = 1 + static_cast<int>(rng.below(4));
        auto u = cover(g, s).undominated;
        auto x = lemma_extend(g, s, k);
        if (x)
            REQUIRE(g.closed_neighbours(*x).intersection_count(u) >= k + 1);
        if (4 * u.count() > k * (n - s.count())) {
            ++triggered;
            REQUIRE(x.has_value());
            auto region = (cover(g, s).boundary | u);
            REQUIRE(region.contains(*x));
        }
    }
    CHECK(triggered > 500);
}

TEST_CASE("greedy_partial")
{
    auto k4 = named_graph(NamedGraphId::K4);
    auto r = greedy_partial(k4, 1, 4);
    CHECK(r.achieved);
    CHECK(r.coverage == 4);
    CHECK_FALSE(r.used_exact_fallback);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = random_supercubic(11, seed, static_cast<int>(seed % 3), false);
        auto res = greedy_partial(g, 3, 10);
        CHECK(res.achieved);
        CHECK(res.coverage >= 10);
        CHECK(res.witness.count() <= 3);
        CHECK(cover(g, res.witness).dom_count == res.coverage);
        if (! res.used_exact_fallback) {
            const int floor[] = {5, 8, 10};
            REQUIRE(res.staged_coverage.size() <= 3);
            for (std::size_t i = 0; i < res.staged_coverage.size(); ++i)
                CHECK(res.staged_coverage[i] >= floor[i]);
        }
    }

    for (const auto & line : fixtures::lines("connected_cubic_14.g6")) {
        auto g = parse_graph6(line);
        auto res = greedy_partial(g, 4, 13);
        REQUIRE(res.achieved);
        REQUIRE(res.witness.count() <= 4);
        REQUIRE(cover(g, res.witness).dom_count >= 13);
    }
}

TEST_CASE("greedy_partial coverage increases strictly at every step")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_cubic(40, seed, false);
        auto res = greedy_partial(g, 13, 40);
        for (std::size_t i = 1; i < res.staged_coverage.size(); ++i)
            CHECK(res.staged_coverage[i] > res.staged_coverage[i - 1]);
        CHECK(res.staged_coverage.back() == res.coverage);
    }
    CHECK_THROWS_AS(greedy_partial(Graph(4, {{0, 1}}), 1, 2), PreconditionError);
}

TEST_CASE("partition of a normalised dominating set")
{
    auto k4 = named_graph(NamedGraphId::K4);
    auto single = build_partition(k4, VertexSet(4, {2}));
    REQUIRE(single.parts.size() == 1);
    CHECK(single.parts[0].members == k4.vertices());

    auto a1 = named_graph(NamedGraphId::A1);
    auto d = bc_normalize(a1, gamma_exact(a1).witness);
    auto p = build_partition(a1, d);
    CHECK(p.parts.size() == 3);
    check_partition(a1, d, p);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_cubic(30, seed, true);
        auto nd = bc_normalize(g, gamma_exact(g).witness);
        check_partition(g, nd, build_partition(g, nd));
    }

    auto path = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(build_partition(path, VertexSet(5, {0, 1, 3})), PreconditionError);
    CHECK_THROWS_AS(build_partition(path, VertexSet(5, {1})), PreconditionError);
}

TEST_CASE("regimes")
{
    CHECK(parse_regime("cubic1314") == ConstructRegime::Cubic1314);
    CHECK_FALSE(parse_regime("cubic").has_value());
    CHECK(regime_alpha(ConstructRegime::Super910) == AlphaThreshold(9, 10));
    CHECK(regime_gamma_bound(ConstructRegime::Cubic1314, 28) == 10);
    CHECK(regime_gamma_bound(ConstructRegime::Generic78, 16) == 6);
    CHECK(regime_violation(ConstructRegime::Cubic1314, random_cubic(26, 1, true)).has_value());
    CHECK_FALSE(regime_violation(ConstructRegime::Cubic1314, random_cubic(28, 1, true)).has_value());
    CHECK(regime_violation(ConstructRegime::Super910, random_cubic(58, 1, true)).has_value());
    CHECK(regime_violation(ConstructRegime::Generic78, Graph(4, {{0, 1}})).has_value());
    CHECK_THROWS_AS(one_third_construct(random_cubic(26, 1, true), ConstructRegime::Cubic1314), PreconditionError);
}

TEST_CASE("one third construction on A1")
{
    auto c = one_third_construct(named_graph(NamedGraphId::A1), ConstructRegime::Generic78);
    CHECK(c.path == ConstructPath::ExactSmall);
    CHECK(c.value == 2);
    CHECK(c.coverage == 7);
    CHECK(c.guarantee_chain_verified);
    auto j = to_json(c);
    CHECK(j["regime"] == "generic78");
    CHECK(j["guarantee_chain_verified"] == true);
}

TEST_CASE("one third construction through the largest parts")
{
    auto a1 = named_graph(NamedGraphId::A1);
    auto g = disjoint_union(a1, named_graph(NamedGraphId::A2));
    auto c = one_third_construct(g, ConstructRegime::Generic78);
    CHECK(c.path == ConstructPath::LargestParts);
    CHECK(c.dominating_set_size == 6);
    CHECK(c.value == 5);
    CHECK(8 * cover(g, c.witness).dom_count >= 7 * 16);

    auto twice = disjoint_union(g, g);
    auto c2 = one_third_construct(twice, ConstructRegime::Generic78);
    CHECK(c2.path == ConstructPath::LargestParts);
    CHECK(c2.value <= 10);
    CHECK(8 * cover(twice, c2.witness).dom_count >= 7 * 32);

    auto bridged = bridged_pair(named_graph(NamedGraphId::G14_1));
    REQUIRE(classify(bridged).is_cubic);
    REQUIRE(is_connected(bridged));
    auto c3 = one_third_construct(bridged, ConstructRegime::Cubic1314);
    CHECK(c3.path == ConstructPath::DominatingSet);
    CHECK(c3.value <= 9);
    CHECK(14 * cover(bridged, c3.witness).dom_count >= 13 * 28);

    auto eight = a1;
    for (int i = 1; i < 8; ++i)
        eight = disjoint_union(eight, a1);
    auto c4 = one_third_construct(eight, ConstructRegime::Super910);
    CHECK(c4.path == ConstructPath::LargestParts);
    CHECK_FALSE(c4.guarantee_chain_verified);
    CHECK(c4.value <= 21);
    CHECK(10 * cover(eight, c4.witness).dom_count >= 9 * 64);
}

TEST_CASE("one third construction against the exact partial domination number")
{
    for (auto name : {"connected_cubic_12.g6", "connected_cubic_14.g6"})
        for (const auto & line : fixtures::lines(name)) {
            auto g = parse_graph6(line);
            auto c = one_third_construct(g, ConstructRegime::Generic78);
            int pd = pd_exact(g, AlphaThreshold(7, 8)).value;
            REQUIRE(c.value >= pd);
            REQUIRE(c.value <= g.order() / 3);
            REQUIRE(8 * cover(g, c.witness).dom_count >= 7 * g.order());
        }
}

TEST_CASE("one third construction on random cubic graphs")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = 16 + 2 * static_cast<int>(seed % 13);
        auto g = random_cubic(n, seed, true);
        auto c = one_third_construct(g, ConstructRegime::Generic78);
        CHECK(c.value <= n / 3);
        CHECK(c.guarantee_chain_verified);
        CHECK(8 * cover(g, c.witness).dom_count >= 7 * n);
    }
}

TEST_CASE("coverage arithmetic behind the largest-parts step")
{
    // n - 2(gamma_bound - k1) vertices are covered at least by the k1 largest parts
    auto ceil_div = [](long a, long b) { return (a + b - 1) / b; };
    for (int n = 15; n <= 2000; ++n) {
        int k1 = n / 3;
        CHECK(n - 2 * (3 * n / 8 - k1) >= ceil_div(7L * n, 8));
        if (n >= 28 && n % 2 == 0)
            CHECK(n - 2 * (5 * n / 14 - k1) >= ceil_div(13L * n, 14));
        if (n >= 60)
            CHECK(n - 2 * (3 * n / 8 - k1) >= ceil_div(9L * n, 10));
    }
}
