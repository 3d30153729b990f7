#include <pdom/errors.hpp>
#include <pdom/isomorphism.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

using std::optional;
using std::pair;
using std::vector;

namespace pdom
{
    namespace
    {
        using Colouring = vector<int>;

        /// Replace colours by the rank of their keys among all distinct keys.
        template <typename Key>
        auto rank_by(const vector<Key> & keys) -> Colouring
        {
            auto sorted = keys;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            Colouring result(keys.size());
            for (std::size_t v = 0; v < keys.size(); ++v)
                result[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
            return result;
        }

        auto colour_count(const Colouring & colours) -> int
        {
            return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
        }

        /// Colour refinement until the number of cells stops growing.
        auto refine(const Graph & g, Colouring colours) -> Colouring
        {
            int cells = colour_count(colours);
            while (true) {
                vector<pair<int, vector<int>>> keys(g.order());
                for (Vertex v = 0; v < g.order(); ++v) {
                    keys[v].first = colours[v];
                    for (auto w : g.neighbours(v))
                        keys[v].second.push_back(colours[w]);
                    std::sort(keys[v].second.begin(), keys[v].second.end());
                }
                auto refined = rank_by(keys);
                int refined_cells = colour_count(refined);
                if (refined_cells == cells)
                    return refined;
                colours = std::move(refined);
                cells = refined_cells;
            }
        }

        auto individualise(const Colouring & colours, Vertex v) -> Colouring
        {
            vector<int> keys(colours.size());
            for (std::size_t u = 0; u < colours.size(); ++u)
                keys[u] = 2 * colours[u] + (static_cast<Vertex>(u) == v ? 0 : 1);
            return rank_by(keys);
        }

        class Search
        {
        public:
            explicit Search(const Graph & g) : _g(g) {}

            auto run() -> void
            {
                Colouring degrees(_g.order());
                for (Vertex v = 0; v < _g.order(); ++v)
                    degrees[v] = _g.degree(v);
                explore(rank_by(degrees), {});
            }

            CanonicalForm best;
            Colouring best_labels;

        private:
            auto leaf_code(const Colouring & labels) const -> CanonicalForm
            {
                CanonicalForm code{_g.order(), vector<std::uint32_t>(_g.order(), 0)};
                for (Vertex v = 0; v < _g.order(); ++v)
                    for (auto w : _g.neighbours(v))
                        code.rows[labels[v]] |= std::uint32_t{1} << labels[w];
                return code;
            }

            /// Automorphism taking each vertex to the vertex with the same label in the reference leaf.
            auto record_automorphism(const Colouring & labels, const Colouring & reference) -> void
            {
                vector<Vertex> by_label(_g.order());
                for (Vertex v = 0; v < _g.order(); ++v)
                    by_label[reference[v]] = v;
                vector<Vertex> image(_g.order());
                bool identity = true;
                for (Vertex v = 0; v < _g.order(); ++v) {
                    image[v] = by_label[labels[v]];
                    identity = identity && image[v] == v;
                }
                if (! identity)
                    _automorphisms.push_back(std::move(image));
            }

            auto find(vector<Vertex> & parent, Vertex v) const -> Vertex
            {
                while (parent[v] != v)
                    v = parent[v] = parent[parent[v]];
                return v;
            }

            /// Orbit representatives under the known automorphisms fixing the prefix pointwise.
            auto orbits(const vector<Vertex> & prefix) const -> vector<Vertex>
            {
                vector<Vertex> parent(_g.order());
                std::iota(parent.begin(), parent.end(), 0);
                for (const auto & a : _automorphisms) {
                    if (! std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return a[p] == p; }))
                        continue;
                    for (Vertex v = 0; v < _g.order(); ++v) {
                        auto r1 = find(parent, v), r2 = find(parent, a[v]);
                        if (r1 != r2)
                            parent[std::max(r1, r2)] = std::min(r1, r2);
                    }
                }
                for (Vertex v = 0; v < _g.order(); ++v)
                    parent[v] = find(parent, v);
                return parent;
            }

            auto explore(Colouring colours, vector<Vertex> prefix) -> void
            {
                colours = refine(_g, std::move(colours));
                int cells = colour_count(colours);
                if (cells == _g.order()) {
                    auto code = leaf_code(colours);
                    if (! _first_labels) {
                        _first_labels = colours;
                        _first_code = code;
                        best = code;
                        best_labels = colours;
                        return;
                    }
                    if (code == _first_code)
                        record_automorphism(colours, *_first_labels);
                    else if (code == best)
                        record_automorphism(colours, best_labels);
                    else if (code < best) {
                        best = std::move(code);
                        best_labels = colours;
                    }
                    return;
                }

                vector<int> cell_size(cells, 0);
                for (auto c : colours)
                    ++cell_size[c];
                int target = -1;
                for (int c = 0; c < cells; ++c)
                    if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target]))
                        target = c;

                vector<Vertex> tried;
                for (Vertex v = 0; v < _g.order(); ++v) {
                    if (colours[v] != target)
                        continue;
                    auto representative = orbits(prefix);
                    if (std::any_of(tried.begin(), tried.end(),
                            [&](Vertex t) { return representative[t] == representative[v]; }))
                        continue;
                    tried.push_back(v);
                    auto extended = prefix;
                    extended.push_back(v);
                    explore(individualise(colours, v), std::move(extended));
                }
            }

            const Graph & _g;
            optional<Colouring> _first_labels;
            CanonicalForm _first_code;
            vector<vector<Vertex>> _automorphisms;
        };

        auto searched(const Graph & g) -> Search
        {
            if (g.order() > max_isomorphism_order)
                throw RangeError("isomorphism testing supports orders up to 32, got " + std::to_string(g.order()));
            Search search(g);
            search.run();
            return search;
        }
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        return searched(g).best;
    }

    auto canonical_labelling(const Graph & g) -> vector<Vertex>
    {
        return searched(g).best_labels;
    }

    auto is_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() > max_isomorphism_order || h.order() > max_isomorphism_order)
            throw RangeError("isomorphism testing supports orders up to 32");
        if (g.order() != h.order() || g.size() != h.size())
            return false;
        return canonical_form(g) == canonical_form(h);
    }
}
