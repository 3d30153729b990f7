#include <pdom/classify.hpp>

#include <algorithm>

using std::optional;
using std::vector;

namespace pdom
{
    auto distances_from(const Graph & g, Vertex source) -> vector<int>
    {
        vector<int> dist(g.order(), -1);
        vector<Vertex> queue{source};
        dist[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto v = queue[head];
            for (auto w : g.neighbours(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    auto is_connected(const Graph & g) -> bool
    {
        auto reached = g.closed_neighbours(0);
        auto frontier = reached;
        while (! frontier.empty()) {
            auto next = g.empty_set();
            for (auto v : frontier)
                next |= g.neighbours(v);
            next -= reached;
            reached |= next;
            frontier = next;
        }
        return reached.count() == g.order();
    }

    auto girth(const Graph & g) -> optional<int>
    {
        optional<int> best;
        for (Vertex root = 0; root < g.order(); ++root) {
            vector<int> dist(g.order(), -1);
            vector<Vertex> parent(g.order(), -1);
            vector<Vertex> queue{root};
            dist[root] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto v = queue[head];
                if (best && 2 * dist[v] + 1 >= *best)
                    break;
                for (auto w : g.neighbours(v)) {
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    }
                    else if (parent[v] != w) {
                        int cycle = dist[v] + dist[w] + 1;
                        if (! best || cycle < *best)
                            best = cycle;
                    }
                }
            }
        }
        return best;
    }

    auto classify(const Graph & g) -> GraphClass
    {
        GraphClass result;
        result.order = g.order();
        result.min_degree = g.min_degree();
        result.max_degree = g.max_degree();
        result.is_cubic = g.min_degree() == 3 && g.max_degree() == 3;
        result.is_supercubic = g.min_degree() >= 3;
        result.is_connected = is_connected(g);
        result.girth = girth(g);
        return result;
    }
}
