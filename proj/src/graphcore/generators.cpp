#include <pdom/classify.hpp>
#include <pdom/errors.hpp>
#include <pdom/generators.hpp>
#include <pdom/rng.hpp>

#include <numeric>
#include <optional>
#include <string>

using std::optional;
using std::to_string;
using std::vector;

namespace pdom
{
    namespace
    {
        auto shuffle(vector<int> & items, Rng & rng) -> void
        {
            for (auto i = items.size(); i > 1; --i)
                std::swap(items[i - 1], items[rng.below(i)]);
        }

        /// One pairing-model attempt; nullopt when it produced a loop or a repeated edge.
        auto try_pairing(const vector<int> & degrees, Rng & rng) -> optional<Graph>
        {
            int n = static_cast<int>(degrees.size());
            vector<int> points;
            for (int v = 0; v < n; ++v)
                points.insert(points.end(), degrees[v], v);
            shuffle(points, rng);

            vector<VertexSet> seen(n, VertexSet(n));
            vector<Edge> edges;
            for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
                int a = points[i], b = points[i + 1];
                if (a == b || seen[a].contains(b))
                    return std::nullopt;
                seen[a].insert(b);
                seen[b].insert(a);
                edges.emplace_back(a, b);
            }
            return Graph(n, edges);
        }

        auto random_with_degrees(const vector<int> & degrees, Rng & rng) -> Graph
        {
            while (true)
                if (auto g = try_pairing(degrees, rng))
                    return *g;
        }
    }

    auto generalized_petersen_unrestricted(int p, int k) -> Graph
    {
        if (p < 3 || k < 1 || k >= p)
            throw RangeError("generalized Petersen parameters (" + to_string(p) + ", " + to_string(k) +
                ") need p >= 3 and 1 <= k < p");
        if (2 * p > max_order)
            throw RangeError("generalized Petersen graph order exceeds 1024");
        vector<Edge> edges;
        for (int i = 0; i < p; ++i) {
            edges.emplace_back(i, (i + 1) % p);
            edges.emplace_back(i, p + i);
            edges.emplace_back(p + i, p + (i + k) % p);
        }
        return Graph(2 * p, edges);
    }

    auto generalized_petersen(int p, int k) -> Graph
    {
        if (p < 3 || k < 1 || 2 * k >= p)
            throw RangeError("generalized Petersen parameters (" + to_string(p) + ", " + to_string(k) +
                ") need p >= 3 and 1 <= k < p/2");
        return generalized_petersen_unrestricted(p, k);
    }

    auto random_cubic(int n, std::uint64_t seed, bool require_connected) -> Graph
    {
        if (n % 2 != 0)
            throw RangeError("cubic graphs need an even order, got " + to_string(n));
        if (n < 4 || n > max_order)
            throw RangeError("random cubic order " + to_string(n) + " outside [4, 1024]");
        Rng rng(seed);
        vector<int> degrees(n, 3);
        while (true) {
            auto g = random_with_degrees(degrees, rng);
            if (! require_connected || is_connected(g))
                return g;
        }
    }

    auto random_supercubic(int n, std::uint64_t seed, int extra_edges, bool require_connected) -> Graph
    {
        if (n < 4 || n > max_order || (n % 2 != 0 && n < 5))
            throw RangeError("random supercubic order " + to_string(n) + " unsupported");
        long long non_edges = static_cast<long long>(n) * (n - 1) / 2 - (3LL * n + n % 2) / 2;
        if (extra_edges < 0 || extra_edges > non_edges)
            throw RangeError("cannot add " + to_string(extra_edges) + " extra edges");

        Rng rng(seed);
        vector<int> degrees(n, 3);
        if (n % 2 != 0)
            degrees[0] = 4;
        while (true) {
            auto base = random_with_degrees(degrees, rng);
            auto edges = base.edges();
            vector<VertexSet> adjacency;
            for (Vertex v = 0; v < n; ++v)
                adjacency.push_back(base.neighbours(v));
            for (int added = 0; added < extra_edges;) {
                int a = static_cast<int>(rng.below(n));
                int b = static_cast<int>(rng.below(n));
                if (a == b || adjacency[a].contains(b))
                    continue;
                adjacency[a].insert(b);
                adjacency[b].insert(a);
                edges.emplace_back(std::min(a, b), std::max(a, b));
                ++added;
            }
            Graph g(n, edges);
            if (! require_connected || is_connected(g))
                return g;
        }
    }

    auto random_permutation(int n, std::uint64_t seed) -> vector<int>
    {
        Rng rng(seed);
        vector<int> result(n);
        std::iota(result.begin(), result.end(), 0);
        shuffle(result, rng);
        return result;
    }
}
