#ifndef ABST_CONSTRUCTION_HPP
#define ABST_CONSTRUCTION_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abst/errors.hpp"
#include "abst/rng.hpp"
#include "abst/tournament.hpp"

namespace abst {

struct ConstructionParams {
    int n = 1;                   // colour count
    int m = 1;                   // copies per bag
    std::uint64_t seed = 1;
    int max_vertices = 20000;    // size guard, overridable
};

// The bag structure on the generated vertex set: an ordered family of
// ⌊(n-1)/2⌋-subsets of {1,..,n-1} plus the copy count m. Vertices are
// numbered bag-major, so bag b occupies ids [b*m, (b+1)*m).
struct BagLayout {
    std::vector<std::vector<int>> family;  // each ascending; lexicographic order
    int copies = 1;                        // m

    int bag_count() const { return static_cast<int>(family.size()); }
    int vertex_count() const { return bag_count() * copies; }

    VertexId vertex_of(int copy, int bag) const { return bag * copies + (copy - 1); }
    int bag_of(VertexId v) const { return v / copies; }
    int copy_of(VertexId v) const { return v % copies + 1; }

    friend bool operator==(const BagLayout&, const BagLayout&) = default;
};

// All ⌊(n-1)/2⌋-subsets of {1,..,n-1} in lexicographic order of their
// ascending element lists. For n <= 2 this is the single empty set.
inline std::vector<std::vector<int>> enumerate_family(int n) {
    if (n < 1) throw BuildError("colour count must be >= 1");
    const int ground = n - 1;
    const int k = ground / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && cur[i] == ground - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace detail {

// Ascending sorted difference a ∖ b of two ascending lists.
inline std::vector<int> set_difference(const std::vector<int>& a,
                                       const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

} // namespace detail

// Sample the random model: fair coin per pair for orientation, then the
// head-bag-minus-tail-bag colour rule (uniform over the candidates, by
// rejection sampling when there are at least two). Intra-bag arcs get
// colour n and consume no colour draw; neither do singleton candidate sets.
// Pairs are visited in lexicographic (u, v) order, u < v, so the stream and
// the instance are pure functions of (n, m, seed).
inline std::pair<ColouredTournament, BagLayout> generate(const ConstructionParams& params) {
    if (params.n < 1 || params.m < 1)
        throw BuildError("construction needs n >= 1 and m >= 1");

    BagLayout layout{enumerate_family(params.n), params.m};
    const long long total =
        static_cast<long long>(layout.bag_count()) * params.m;
    if (total > params.max_vertices)
        throw GuardError("instance would have " + std::to_string(total) +
                         " vertices, above the cap of " +
                         std::to_string(params.max_vertices));
    const int vertices = static_cast<int>(total);

    SplitMix64 rng(params.seed);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(vertices) * (vertices - 1) / 2);
    for (VertexId u = 0; u < vertices; ++u) {
        for (VertexId v = u + 1; v < vertices; ++v) {
            const bool forward = (rng.next() & 1u) == 0;  // u -> v
            const VertexId tail = forward ? u : v;
            const VertexId head = forward ? v : u;
            const int bag_tail = layout.bag_of(tail);
            const int bag_head = layout.bag_of(head);
            ColourId colour;
            if (bag_tail == bag_head) {
                colour = params.n;
            } else {
                const std::vector<int> cand = detail::set_difference(
                    layout.family[bag_head], layout.family[bag_tail]);
                colour = cand.size() == 1
                             ? cand[0]
                             : cand[rng.next_below(cand.size())];
            }
            arcs.push_back({tail, head, colour});
        }
    }
    return {ColouredTournament::build(vertices, params.n, arcs), std::move(layout)};
}

struct StructureReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Check an instance against the construction rule: intra-bag arcs carry
// colour n, inter-bag arcs carry a colour of the head bag missing from the
// tail bag, and per bag the incoming, outgoing and in-bag colour sets are
// pairwise disjoint.
inline StructureReport validate_structure(const ColouredTournament& t,
                                          const BagLayout& layout) {
    StructureReport report;
    const int n = t.colour_count();
    if (t.vertex_count() != layout.vertex_count()) {
        report.violations.push_back(
            "vertex count " + std::to_string(t.vertex_count()) +
            " does not match layout (" + std::to_string(layout.bag_count()) +
            " bags x " + std::to_string(layout.copies) + " copies)");
        return report;
    }

    const int bags = layout.bag_count();
    std::vector<std::set<int>> incoming(bags), outgoing(bags);

    for (const Arc& a : t.arcs()) {
        const int bag_tail = layout.bag_of(a.tail);
        const int bag_head = layout.bag_of(a.head);
        if (bag_tail == bag_head) {
            if (a.colour != n)
                report.violations.push_back(
                    "intra-bag arc " + std::to_string(a.tail) + "->" +
                    std::to_string(a.head) + " has colour " +
                    std::to_string(a.colour) + ", expected " + std::to_string(n));
        } else {
            const std::vector<int> cand = detail::set_difference(
                layout.family[bag_head], layout.family[bag_tail]);
            if (!std::binary_search(cand.begin(), cand.end(), a.colour))
                report.violations.push_back(
                    "inter-bag arc " + std::to_string(a.tail) + "->" +
                    std::to_string(a.head) + " has colour " +
                    std::to_string(a.colour) +
                    ", not in head-bag-minus-tail-bag set");
            outgoing[bag_tail].insert(a.colour);
            incoming[bag_head].insert(a.colour);
        }
    }

    for (int b = 0; b < bags; ++b) {
        auto overlap = [](const std::set<int>& x, const std::set<int>& y) {
            for (int c : x)
                if (y.count(c)) return c;
            return -1;
        };
        if (int c = overlap(incoming[b], outgoing[b]); c != -1)
            report.violations.push_back("bag " + std::to_string(b) + ": colour " +
                                        std::to_string(c) +
                                        " both enters and leaves the bag");
        if (incoming[b].count(n))
            report.violations.push_back("bag " + std::to_string(b) +
                                        ": in-bag colour enters the bag");
        if (outgoing[b].count(n))
            report.violations.push_back("bag " + std::to_string(b) +
                                        ": in-bag colour leaves the bag");
    }
    return report;
}

} // namespace abst

#endif
