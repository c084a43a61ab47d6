#ifndef ABST_TOURNAMENT_HPP
#define ABST_TOURNAMENT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abst/errors.hpp"

namespace abst {

using VertexId = int;  // dense labels 0..N-1
using ColourId = int;  // 1-based, in [1, n]

struct Arc {
    VertexId tail;
    VertexId head;
    ColourId colour;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// A complete orientation with an arc colouring: exactly one coloured arc per
// unordered pair of distinct vertices. Immutable after build; safe to read
// from any number of threads.
class ColouredTournament {
public:
    static ColouredTournament build(int vertex_count, int colour_count,
                                    const std::vector<Arc>& arc_list) {
        if (vertex_count < 1) throw BuildError("vertex count must be >= 1");
        if (colour_count < 1) throw BuildError("colour count must be >= 1");

        ColouredTournament t;
        t.vertex_count_ = vertex_count;
        t.colour_count_ = colour_count;
        const std::size_t pairs =
            static_cast<std::size_t>(vertex_count) * (vertex_count - 1) / 2;
        t.cells_.assign(pairs, 0);

        for (const Arc& a : arc_list) {
            if (a.tail == a.head)
                throw BuildError("self-loop on vertex " + std::to_string(a.tail));
            if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 ||
                a.head >= vertex_count)
                throw BuildError("vertex out of range on arc (" +
                                 std::to_string(a.tail) + "," +
                                 std::to_string(a.head) + ")");
            if (a.colour < 1 || a.colour > colour_count)
                throw BuildError("colour " + std::to_string(a.colour) +
                                 " out of range on pair {" +
                                 pair_name(a.tail, a.head) + "}");
            const VertexId lo = a.tail < a.head ? a.tail : a.head;
            const VertexId hi = a.tail < a.head ? a.head : a.tail;
            const std::size_t k = t.pair_index(lo, hi);
            if (t.cells_[k] != 0)
                throw BuildError("duplicate pair {" + pair_name(a.tail, a.head) + "}");
            const bool reversed = a.tail > a.head;  // stored orientation bit
            t.cells_[k] = static_cast<std::uint32_t>(a.colour) |
                          (reversed ? kReversedBit : 0u);
        }

        for (VertexId u = 0; u < vertex_count; ++u)
            for (VertexId v = u + 1; v < vertex_count; ++v)
                if (t.cells_[t.pair_index(u, v)] == 0)
                    throw BuildError("missing pair {" + pair_name(u, v) + "}");
        return t;
    }

    int vertex_count() const { return vertex_count_; }
    int colour_count() const { return colour_count_; }

    // The oriented, coloured record on the pair {u, v}.
    Arc arc_on_pair(VertexId u, VertexId v) const {
        const VertexId lo = u < v ? u : v;
        const VertexId hi = u < v ? v : u;
        const std::uint32_t cell = cells_[pair_index(lo, hi)];
        const ColourId colour = static_cast<ColourId>(cell & ~kReversedBit);
        if (cell & kReversedBit) return {hi, lo, colour};
        return {lo, hi, colour};
    }

    // True iff the arc on {u, v} is oriented u -> v.
    bool has_arc(VertexId u, VertexId v) const {
        return arc_on_pair(u, v).tail == u;
    }

    ColourId colour_of(VertexId u, VertexId v) const {
        return arc_on_pair(u, v).colour;
    }

    // All arcs, ordered by (min id, max id). This is the canonical order
    // used by serialization.
    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        out.reserve(cells_.size());
        for (VertexId u = 0; u < vertex_count_; ++u)
            for (VertexId v = u + 1; v < vertex_count_; ++v)
                out.push_back(arc_on_pair(u, v));
        return out;
    }

    // Ordered pairs (u, v) with an arc u -> v of colour c.
    std::vector<std::pair<VertexId, VertexId>> colour_subgraph(ColourId c) const {
        check_colour(c);
        std::vector<std::pair<VertexId, VertexId>> out;
        for (VertexId u = 0; u < vertex_count_; ++u)
            for (VertexId v = u + 1; v < vertex_count_; ++v) {
                const Arc a = arc_on_pair(u, v);
                if (a.colour == c) out.emplace_back(a.tail, a.head);
            }
        return out;
    }

    void check_colour(ColourId c) const {
        if (c < 1 || c > colour_count_)
            throw BuildError("colour " + std::to_string(c) + " out of range [1," +
                             std::to_string(colour_count_) + "]");
    }

private:
    static constexpr std::uint32_t kReversedBit = 0x80000000u;

    static std::string pair_name(VertexId u, VertexId v) {
        const VertexId lo = u < v ? u : v;
        const VertexId hi = u < v ? v : u;
        return std::to_string(lo) + "," + std::to_string(hi);
    }

    // Index of the unordered pair {u, v}, u < v, in row-major upper-triangle
    // order.
    std::size_t pair_index(VertexId u, VertexId v) const {
        const std::size_t n = static_cast<std::size_t>(vertex_count_);
        const std::size_t su = static_cast<std::size_t>(u);
        const std::size_t sv = static_cast<std::size_t>(v);
        return su * (2 * n - su - 1) / 2 + (sv - su - 1);
    }

    int vertex_count_ = 0;
    int colour_count_ = 0;
    std::vector<std::uint32_t> cells_;  // colour | orientation bit, 0 = unset
};

} // namespace abst

#endif
