#ifndef ABST_SOLVER_HPP
#define ABST_SOLVER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "abst/absorption.hpp"
#include "abst/bitset.hpp"
#include "abst/errors.hpp"

namespace abst {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SolveResult {
    int optimum = 0;
    std::vector<VertexId> witness;  // ascending
    std::uint64_t nodes_explored = 0;
    bool proved_optimal = false;
    bool budget_exhausted = false;
};

// Greedy cover: repeatedly take the candidate covering the most uncovered
// vertices, smallest id on ties.
inline std::vector<VertexId> greedy_upper_bound(const AbsorptionRelation& rel) {
    const int n = rel.vertex_count;
    Bitset covered(static_cast<std::size_t>(n));
    std::vector<VertexId> picked;
    while (!covered.all()) {
        VertexId best = 0;
        std::size_t best_gain = 0;
        for (VertexId y = 0; y < n; ++y) {
            const std::size_t gain = rel.covers[y].count_andnot(covered);
            if (gain > best_gain) {
                best_gain = gain;
                best = y;
            }
        }
        picked.push_back(best);
        covered |= rel.covers[best];
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

namespace detail {

// Depth-first branch and bound over the set-cover formulation. Branching
// vertex: the uncovered vertex with the fewest covering candidates (static
// counts, smallest id on ties); children are its candidates in ascending id
// order. Admissible bound: ceil(uncovered / best remaining coverage).
class CoverSearch {
public:
    CoverSearch(const AbsorptionRelation& rel, std::uint64_t budget)
        : rel_(rel), n_(rel.vertex_count), budget_(budget),
          candidates_of_(static_cast<std::size_t>(n_)) {
        for (VertexId y = 0; y < n_; ++y)
            rel_.covers[y].for_each([&](std::size_t x) {
                candidates_of_[x].push_back(y);
            });
    }

    // Search for absorbing sets smaller than size_limit; records the best
    // one found. stop_at_first makes any hit terminate the search.
    void run(int size_limit, bool stop_at_first) {
        size_limit_ = size_limit;
        stop_at_first_ = stop_at_first;
        found_.clear();
        has_found_ = false;
        nodes_ = 0;
        exhausted_ = false;
        chosen_.clear();
        dfs(Bitset(static_cast<std::size_t>(n_)));
    }

    bool found() const { return has_found_; }
    const std::vector<VertexId>& best() const { return found_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    // Returns true when the search must unwind (budget or early stop).
    bool dfs(const Bitset& covered) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return true;
        }
        const std::size_t uncovered = static_cast<std::size_t>(n_) - covered.count();
        if (uncovered == 0) {
            found_ = chosen_;
            std::sort(found_.begin(), found_.end());
            has_found_ = true;
            size_limit_ = static_cast<int>(chosen_.size());
            return stop_at_first_;
        }
        std::size_t max_cov = 0;
        for (VertexId y = 0; y < n_; ++y)
            max_cov = std::max(max_cov, rel_.covers[y].count_andnot(covered));
        const int lower = static_cast<int>((uncovered + max_cov - 1) / max_cov);
        if (static_cast<int>(chosen_.size()) + lower >= size_limit_) return false;

        VertexId branch = -1;
        std::size_t fewest = static_cast<std::size_t>(n_) + 1;
        for (VertexId x = 0; x < n_; ++x)
            if (!covered.test(static_cast<std::size_t>(x)) &&
                candidates_of_[x].size() < fewest) {
                fewest = candidates_of_[x].size();
                branch = x;
            }

        for (VertexId y : candidates_of_[branch]) {
            Bitset next = covered;
            next |= rel_.covers[y];
            chosen_.push_back(y);
            const bool stop = dfs(next);
            chosen_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const AbsorptionRelation& rel_;
    int n_;
    std::uint64_t budget_;
    std::vector<std::vector<VertexId>> candidates_of_;

    int size_limit_ = 0;
    bool stop_at_first_ = false;
    std::vector<VertexId> chosen_;
    std::vector<VertexId> found_;
    bool has_found_ = false;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace detail

inline SolveResult min_absorbing_set_exact(
    const AbsorptionRelation& rel,
    std::optional<std::uint64_t> node_budget = std::nullopt) {
    const std::vector<VertexId> greedy = greedy_upper_bound(rel);
    detail::CoverSearch search(rel, node_budget.value_or(kDefaultNodeBudget));
    search.run(static_cast<int>(greedy.size()), /*stop_at_first=*/false);

    SolveResult result;
    result.witness = search.found() ? search.best() : greedy;
    result.optimum = static_cast<int>(result.witness.size());
    result.nodes_explored = search.nodes();
    result.budget_exhausted = search.exhausted();
    result.proved_optimal = !search.exhausted();
    return result;
}

enum class SizeDecision { Found, None, Budget };

struct SizeQueryResult {
    SizeDecision decision = SizeDecision::None;
    std::vector<VertexId> witness;  // populated when Found, size exactly k
    std::uint64_t nodes_explored = 0;
};

// Decide whether an absorbing set of size exactly k exists. A smaller hit is
// padded up to size k with the smallest unused ids (supersets of absorbing
// sets absorb).
inline SizeQueryResult exists_absorbing_of_size(
    const AbsorptionRelation& rel, int k,
    std::optional<std::uint64_t> node_budget = std::nullopt) {
    if (k < 0 || k > rel.vertex_count)
        throw std::out_of_range("size " + std::to_string(k) +
                                " out of range [0," +
                                std::to_string(rel.vertex_count) + "]");
    SizeQueryResult result;
    if (k == 0) {
        result.decision = rel.vertex_count == 0 ? SizeDecision::Found
                                                : SizeDecision::None;
        return result;
    }
    detail::CoverSearch search(rel, node_budget.value_or(kDefaultNodeBudget));
    search.run(k + 1, /*stop_at_first=*/true);
    result.nodes_explored = search.nodes();
    if (search.found()) {
        result.decision = SizeDecision::Found;
        result.witness = search.best();
        for (VertexId v = 0; static_cast<int>(result.witness.size()) < k; ++v)
            if (!std::binary_search(result.witness.begin(), result.witness.end(), v)) {
                result.witness.insert(
                    std::lower_bound(result.witness.begin(), result.witness.end(), v),
                    v);
            }
    } else if (search.exhausted()) {
        result.decision = SizeDecision::Budget;
    }
    return result;
}

// Test oracle: enumerate subsets by increasing size, lexicographic within a
// size; the first absorbing subset wins. Guarded to tiny instances.
inline SolveResult min_absorbing_brute(const AbsorptionRelation& rel) {
    const int n = rel.vertex_count;
    if (n > 20)
        throw GuardError("brute-force solver is limited to 20 vertices, got " +
                         std::to_string(n));
    SolveResult result;
    for (int k = 1; k <= n; ++k) {
        std::vector<VertexId> combo(k);
        for (int i = 0; i < k; ++i) combo[i] = i;
        for (;;) {
            ++result.nodes_explored;
            if (is_absorbing(rel, combo)) {
                result.optimum = k;
                result.witness = combo;
                result.proved_optimal = true;
                return result;
            }
            int i = k - 1;
            while (i >= 0 && combo[i] == n - (k - i)) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    // unreachable for n >= 1: the full vertex set always absorbs
    throw std::logic_error("no absorbing subset found");
}

} // namespace abst

#endif
