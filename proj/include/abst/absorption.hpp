#ifndef ABST_ABSORPTION_HPP
#define ABST_ABSORPTION_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "abst/bitset.hpp"
#include "abst/construction.hpp"
#include "abst/tournament.hpp"

namespace abst {

// The absorbed-by relation of a tournament. covers[y] is the coverage set
// A(y) = {y} ∪ {x : monochromatic path of length >= 1 from x to y}; the
// relation itself holds only pairs with x != y.
struct AbsorptionRelation {
    int vertex_count = 0;
    std::vector<Bitset> covers;

    bool absorbed(VertexId x, VertexId y) const {
        return x != y && covers[y].test(x);
    }

    // Number of ordered (x, y) pairs in the relation.
    std::size_t pair_count() const {
        std::size_t c = 0;
        for (const Bitset& a : covers) c += a.count() - 1;  // minus y itself
        return c;
    }

    friend bool operator==(const AbsorptionRelation&, const AbsorptionRelation&) = default;
};

namespace detail {

// Successor bitsets of the colour-c subgraph (adj[u] = heads of c-arcs out
// of u); reversed = predecessors instead.
inline std::vector<Bitset> colour_adjacency(const ColouredTournament& t,
                                            ColourId c, bool reversed) {
    const int n = t.vertex_count();
    std::vector<Bitset> adj(n, Bitset(static_cast<std::size_t>(n)));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            const Arc a = t.arc_on_pair(u, v);
            if (a.colour != c) continue;
            if (reversed)
                adj[a.head].set(static_cast<std::size_t>(a.tail));
            else
                adj[a.tail].set(static_cast<std::size_t>(a.head));
        }
    return adj;
}

// Reflexive-transitive closure rows over the given adjacency: row x holds
// every vertex reachable from x (including x).
inline std::vector<Bitset> closure(const std::vector<Bitset>& adj) {
    const std::size_t n = adj.size();
    std::vector<Bitset> reach(n, Bitset(n));
    std::vector<VertexId> queue;
    for (std::size_t x = 0; x < n; ++x) {
        Bitset& vis = reach[x];
        vis.set(x);
        queue.assign(1, static_cast<VertexId>(x));
        while (!queue.empty()) {
            const VertexId u = queue.back();
            queue.pop_back();
            adj[u].for_each([&](std::size_t v) {
                if (!vis.test(v)) {
                    vis.set(v);
                    queue.push_back(static_cast<VertexId>(v));
                }
            });
        }
    }
    return reach;
}

} // namespace detail

// Reflexive-transitive reachability of the colour-c subgraph: row x is the
// set of vertices reachable from x along colour-c arcs.
inline std::vector<Bitset> monochromatic_reachability(const ColouredTournament& t,
                                                      ColourId c) {
    t.check_colour(c);
    return detail::closure(detail::colour_adjacency(t, c, /*reversed=*/false));
}

// General path: per-colour backward reachability sweeps, unioned into the
// coverage sets.
inline AbsorptionRelation absorbed_by(const ColouredTournament& t) {
    const int n = t.vertex_count();
    AbsorptionRelation rel;
    rel.vertex_count = n;
    rel.covers.assign(n, Bitset(static_cast<std::size_t>(n)));
    for (VertexId y = 0; y < n; ++y) rel.covers[y].set(y);

    for (ColourId c = 1; c <= t.colour_count(); ++c) {
        const auto back = detail::closure(detail::colour_adjacency(t, c, true));
        for (VertexId y = 0; y < n; ++y) rel.covers[y] |= back[y];
    }
    return rel;
}

// Fast path for construction instances. Every monochromatic path there is
// either inside a bag (colour n) or a single arc, so the relation is the
// per-bag colour-n reachability plus all direct arcs.
inline AbsorptionRelation absorbed_by_construction(const ColouredTournament& t,
                                                   const BagLayout& layout) {
    {
        const StructureReport report = validate_structure(t, layout);
        if (!report.ok())
            throw BuildError("structure validation failed: " + report.violations.front());
    }
    const int n = t.vertex_count();
    const int m = layout.copies;
    AbsorptionRelation rel;
    rel.vertex_count = n;
    rel.covers.assign(n, Bitset(static_cast<std::size_t>(n)));
    for (VertexId y = 0; y < n; ++y) rel.covers[y].set(y);

    for (const Arc& a : t.arcs()) rel.covers[a.head].set(a.tail);

    // Per-bag reachability: each bag induces a colour-n tournament on its m
    // vertices; sweep backward from every member.
    std::vector<VertexId> stack;
    std::vector<bool> vis(static_cast<std::size_t>(m));
    for (int b = 0; b < layout.bag_count(); ++b) {
        const VertexId base = layout.vertex_of(1, b);
        for (int yi = 0; yi < m; ++yi) {
            std::fill(vis.begin(), vis.end(), false);
            vis[yi] = true;
            stack.assign(1, static_cast<VertexId>(yi));
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int w = 0; w < m; ++w)
                    if (!vis[w] && t.has_arc(base + w, base + u)) {
                        vis[w] = true;
                        stack.push_back(w);
                    }
            }
            Bitset& cover = rel.covers[base + yi];
            for (int w = 0; w < m; ++w)
                if (vis[w]) cover.set(static_cast<std::size_t>(base + w));
        }
    }
    return rel;
}

// True iff the coverage sets of S jointly cover every vertex.
inline bool is_absorbing(const AbsorptionRelation& rel,
                         const std::vector<VertexId>& candidates) {
    Bitset covered(static_cast<std::size_t>(rel.vertex_count));
    for (VertexId y : candidates) {
        if (y < 0 || y >= rel.vertex_count)
            throw std::out_of_range("vertex id " + std::to_string(y) +
                                    " out of range [0," +
                                    std::to_string(rel.vertex_count) + ")");
        covered |= rel.covers[y];
    }
    return covered.all();
}

} // namespace abst

#endif
