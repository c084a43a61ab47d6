#ifndef ABST_IO_HPP
#define ABST_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abst/construction.hpp"
#include "abst/errors.hpp"
#include "abst/tournament.hpp"

namespace abst {

// Canonical "act 1" text: header, then arc lines ordered by (min id, max id),
// then optional bag/vmap metadata. The output is byte-stable, so digests and
// round trips are deterministic.
inline std::string serialize(const ColouredTournament& t,
                             const BagLayout* layout = nullptr) {
    std::ostringstream out;
    out << "act 1\n";
    out << "colours " << t.colour_count() << "\n";
    out << "vertices " << t.vertex_count() << "\n";
    for (const Arc& a : t.arcs())
        out << "arc " << a.tail << " " << a.head << " " << a.colour << "\n";
    if (layout) {
        for (int b = 0; b < layout->bag_count(); ++b) {
            out << "bag " << b;
            for (int e : layout->family[b]) out << " " << e;
            out << "\n";
        }
        for (VertexId v = 0; v < layout->vertex_count(); ++v)
            out << "vmap " << v << " " << layout->bag_of(v) << " "
                << layout->copy_of(v) << "\n";
    }
    return out.str();
}

struct ParsedInstance {
    ColouredTournament tournament;
    std::optional<BagLayout> layout;
};

inline ParsedInstance parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_tokens = [&](std::vector<std::string>& tokens) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            tokens.clear();
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    auto to_int = [&](const std::string& s) -> long long {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail("expected a number, got '" + s + "'");
            return 0;  // unreachable
        }
    };

    std::vector<std::string> tok;
    if (!next_tokens(tok) || tok.size() != 2 || tok[0] != "act" || tok[1] != "1")
        throw ParseError("missing 'act 1' header");
    if (!next_tokens(tok) || tok.size() != 2 || tok[0] != "colours")
        throw ParseError("missing 'colours <n>' line");
    const long long colours = to_int(tok[1]);
    if (!next_tokens(tok) || tok.size() != 2 || tok[0] != "vertices")
        throw ParseError("missing 'vertices <N>' line");
    const long long vertices = to_int(tok[1]);
    if (colours < 1 || vertices < 1)
        throw ParseError("inconsistent header: colours and vertices must be >= 1");

    const long long expected_arcs = vertices * (vertices - 1) / 2;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(expected_arcs));
    std::vector<std::vector<int>> bags;
    std::vector<long long> vmap_bag, vmap_copy;

    while (next_tokens(tok)) {
        if (tok[0] == "arc") {
            if (tok.size() != 4) fail("arc line needs 3 numbers");
            arcs.push_back({static_cast<VertexId>(to_int(tok[1])),
                            static_cast<VertexId>(to_int(tok[2])),
                            static_cast<ColourId>(to_int(tok[3]))});
        } else if (tok[0] == "bag") {
            if (tok.size() < 2) fail("bag line needs an index");
            const long long idx = to_int(tok[1]);
            if (idx != static_cast<long long>(bags.size()))
                fail("bag indices must be consecutive from 0");
            std::vector<int> elems;
            for (std::size_t i = 2; i < tok.size(); ++i)
                elems.push_back(static_cast<int>(to_int(tok[i])));
            for (std::size_t i = 1; i < elems.size(); ++i)
                if (elems[i - 1] >= elems[i]) fail("bag elements must be ascending");
            bags.push_back(std::move(elems));
        } else if (tok[0] == "vmap") {
            if (tok.size() != 4) fail("vmap line needs 3 numbers");
            const long long v = to_int(tok[1]);
            if (v != static_cast<long long>(vmap_bag.size()))
                fail("vmap vertex ids must be consecutive from 0");
            vmap_bag.push_back(to_int(tok[2]));
            vmap_copy.push_back(to_int(tok[3]));
        } else {
            fail("unknown directive '" + tok[0] + "'");
        }
    }

    if (static_cast<long long>(arcs.size()) != expected_arcs)
        throw ParseError("expected " + std::to_string(expected_arcs) +
                         " arcs, got " + std::to_string(arcs.size()));

    ParsedInstance result{
        ColouredTournament::build(static_cast<int>(vertices),
                                  static_cast<int>(colours), arcs),
        std::nullopt};

    if (!bags.empty() || !vmap_bag.empty()) {
        if (bags.empty()) throw ParseError("vmap lines without bag lines");
        if (vmap_bag.size() != static_cast<std::size_t>(vertices))
            throw ParseError("expected one vmap line per vertex");
        if (vertices % static_cast<long long>(bags.size()) != 0)
            throw ParseError("vertex count is not a multiple of the bag count");
        BagLayout layout;
        layout.family = std::move(bags);
        layout.copies = static_cast<int>(vertices) / layout.bag_count();
        for (VertexId v = 0; v < static_cast<int>(vertices); ++v) {
            if (vmap_bag[v] != layout.bag_of(v) || vmap_copy[v] != layout.copy_of(v))
                throw ParseError("vmap for vertex " + std::to_string(v) +
                                 " does not match the bag-major numbering");
        }
        result.layout = std::move(layout);
    }
    return result;
}

} // namespace abst

#endif
