#ifndef ABST_TESTS_HELPERS_HPP
#define ABST_TESTS_HELPERS_HPP

#include <vector>

#include "abst/absorption.hpp"
#include "abst/rng.hpp"
#include "abst/tournament.hpp"

namespace abst_tests {

// Arbitrary random colouring, not the paper construction.
inline abst::ColouredTournament random_tournament(abst::SplitMix64& rng,
                                                  int vertices, int colours) {
    std::vector<abst::Arc> arcs;
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v) {
            const bool forward = (rng.next() & 1u) == 0;
            const int colour = 1 + static_cast<int>(rng.next_below(
                                       static_cast<std::uint64_t>(colours)));
            arcs.push_back(forward ? abst::Arc{u, v, colour}
                                   : abst::Arc{v, u, colour});
        }
    return abst::ColouredTournament::build(vertices, colours, arcs);
}

// Independent absorption oracle: enumerate simple colour-c paths from x to y
// by backtracking DFS, no bitset closure involved.
inline bool simple_path_exists(const abst::ColouredTournament& t, int colour,
                               int from, int to, std::vector<bool>& visited) {
    if (from == to) return true;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v == from || visited[v]) continue;
        const abst::Arc a = t.arc_on_pair(from, v);
        if (a.tail != from || a.colour != colour) continue;
        visited[v] = true;
        if (simple_path_exists(t, colour, v, to, visited)) return true;
        visited[v] = false;
    }
    return false;
}

inline abst::AbsorptionRelation absorbed_by_oracle(const abst::ColouredTournament& t) {
    const int n = t.vertex_count();
    abst::AbsorptionRelation rel;
    rel.vertex_count = n;
    rel.covers.assign(n, abst::Bitset(static_cast<std::size_t>(n)));
    for (int y = 0; y < n; ++y) {
        rel.covers[y].set(y);
        for (int x = 0; x < n; ++x) {
            if (x == y) continue;
            for (int c = 1; c <= t.colour_count(); ++c) {
                // length >= 1 paths only: start from a c-arc out of x
                bool reached = false;
                for (int v = 0; v < n && !reached; ++v) {
                    if (v == x) continue;
                    const abst::Arc a = t.arc_on_pair(x, v);
                    if (a.tail != x || a.colour != c) continue;
                    std::vector<bool> visited(n, false);
                    visited[x] = true;
                    visited[v] = true;
                    reached = simple_path_exists(t, c, v, y, visited);
                }
                if (reached) {
                    rel.covers[y].set(x);
                    break;
                }
            }
        }
    }
    return rel;
}

} // namespace abst_tests

#endif
