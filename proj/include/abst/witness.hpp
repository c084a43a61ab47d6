#ifndef ABST_WITNESS_HPP
#define ABST_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "abst/absorption.hpp"
#include "abst/bounds.hpp"
#include "abst/construction.hpp"
#include "abst/errors.hpp"
#include "abst/io.hpp"
#include "abst/solver.hpp"

namespace abst {

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

// A seed-reproducible claim that the instance generated from (n, m, seed)
// has no absorbing set smaller than optimum_at_least.
struct Certificate {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    std::uint64_t p = 0;
    int optimum_at_least = 0;
    std::uint64_t instance_digest = 0;
    std::uint64_t solver_nodes = 0;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline std::string serialize_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << "cert 1\n";
    out << "n " << cert.n << "\n";
    out << "m " << cert.m << "\n";
    out << "seed " << cert.seed << "\n";
    out << "p " << cert.p << "\n";
    out << "optimum-at-least " << cert.optimum_at_least << "\n";
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(cert.instance_digest));
    out << "digest " << digest << "\n";
    out << "solver-nodes " << cert.solver_nodes << "\n";
    return out.str();
}

inline Certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string key;
    std::string version;
    if (!(in >> key >> version) || key != "cert" || version != "1")
        throw ParseError("missing 'cert 1' header");
    Certificate cert;
    bool have[6] = {};
    while (in >> key) {
        if (key == "n") {
            in >> cert.n;
            have[0] = true;
        } else if (key == "m") {
            in >> cert.m;
            have[1] = true;
        } else if (key == "seed") {
            in >> cert.seed;
            have[2] = true;
        } else if (key == "p") {
            in >> cert.p;
            have[3] = true;
        } else if (key == "optimum-at-least") {
            in >> cert.optimum_at_least;
            have[4] = true;
        } else if (key == "digest") {
            std::string hex;
            in >> hex;
            if (hex.size() != 16) throw ParseError("digest must be 16 hex digits");
            try {
                std::size_t pos = 0;
                cert.instance_digest = std::stoull(hex, &pos, 16);
                if (pos != hex.size()) throw std::invalid_argument(hex);
            } catch (const std::exception&) {
                throw ParseError("digest must be 16 hex digits");
            }
            have[5] = true;
        } else if (key == "solver-nodes") {
            in >> cert.solver_nodes;
        } else {
            throw ParseError("unknown certificate field '" + key + "'");
        }
        if (in.fail()) throw ParseError("malformed value for field '" + key + "'");
    }
    for (bool h : have)
        if (!h) throw ParseError("incomplete certificate");
    return cert;
}

namespace detail {

// C(a, b) in floating point, saturating; only compared against the
// enumeration guard.
inline double binomial_estimate(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0.0;
    if (b > a - b) b = a - b;
    double r = 1.0;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r *= static_cast<double>(a - b + i) / static_cast<double>(i);
        if (r > 1e18) return 1e18;
    }
    return r;
}

inline constexpr double kRefutationGuard = 1e8;  // max candidate sets

struct TrialResult {
    std::uint64_t seed = 0;
    bool success = false;
    std::string outcome;
    Certificate certificate;
};

inline TrialResult run_trial(int n, int m, std::uint64_t seed,
                             std::uint64_t node_budget) {
    TrialResult trial;
    trial.seed = seed;
    auto [t, layout] = generate({n, m, seed});
    const StructureReport structure = validate_structure(t, layout);
    if (!structure.ok()) {
        trial.outcome = "structure validation failed: " + structure.violations.front();
        return trial;
    }
    const AbsorptionRelation rel = absorbed_by_construction(t, layout);
    if (t.vertex_count() <= 200 && !(rel == absorbed_by(t))) {
        trial.outcome = "fast-path absorption disagrees with the general path";
        return trial;
    }
    const int target = static_cast<int>(family_size(n));
    const SizeQueryResult query =
        exists_absorbing_of_size(rel, target - 1, node_budget);
    switch (query.decision) {
        case SizeDecision::Found: {
            std::ostringstream o;
            o << "absorbing set of size " << target - 1 << " exists:";
            for (VertexId v : query.witness) o << " " << v;
            trial.outcome = o.str();
            break;
        }
        case SizeDecision::Budget:
            trial.outcome = "node budget exhausted, inconclusive";
            break;
        case SizeDecision::None:
            trial.success = true;
            trial.outcome = "no absorbing set of size " +
                            std::to_string(target - 1) + " (proved)";
            trial.certificate = {n,
                                 m,
                                 seed,
                                 static_cast<std::uint64_t>(target),
                                 target,
                                 fnv1a64(serialize(t, &layout)),
                                 query.nodes_explored};
            break;
    }
    return trial;
}

} // namespace detail

struct TrialOutcome {
    std::uint64_t seed = 0;
    std::string outcome;
};

struct HuntResult {
    std::optional<Certificate> certificate;
    std::vector<TrialOutcome> trials;  // outcomes up to and including success
};

// Try seeds seed_start, seed_start+1, ... until one instance provably has no
// absorbing set of size p-1. Trials are independent; with jobs > 1 they run
// in parallel batches and the smallest successful seed wins.
inline HuntResult hunt(int n, int m, std::uint64_t seed_start, int max_trials,
                       int jobs = 1,
                       std::uint64_t node_budget = kDefaultNodeBudget) {
    if (n < 1 || m < 1 || max_trials < 1)
        throw BuildError("hunt needs n >= 1, m >= 1 and at least one trial");
    const std::uint64_t p = family_size(n);
    const std::uint64_t vertices = p * static_cast<std::uint64_t>(m);
    if (detail::binomial_estimate(vertices, p - 1) > detail::kRefutationGuard)
        throw GuardError("refutation of size " + std::to_string(p - 1) +
                         " needs more than 1e8 candidate sets at N = " +
                         std::to_string(vertices));

    HuntResult result;
    if (jobs < 1) jobs = 1;
    for (int done = 0; done < max_trials && !result.certificate;) {
        const int batch = std::min(jobs, max_trials - done);
        std::vector<detail::TrialResult> outcomes(static_cast<std::size_t>(batch));
        if (batch == 1) {
            outcomes[0] = detail::run_trial(n, m, seed_start + done, node_budget);
        } else {
            std::vector<std::thread> workers;
            workers.reserve(static_cast<std::size_t>(batch));
            for (int i = 0; i < batch; ++i)
                workers.emplace_back([&, i] {
                    outcomes[i] = detail::run_trial(n, m, seed_start + done + i,
                                                    node_budget);
                });
            for (std::thread& w : workers) w.join();
        }
        for (const detail::TrialResult& trial : outcomes) {
            result.trials.push_back({trial.seed, trial.outcome});
            if (trial.success) {
                result.certificate = trial.certificate;
                break;
            }
        }
        done += batch;
    }
    return result;
}

struct VerifyResult {
    bool ok = false;
    std::string reason;
    std::vector<VertexId> counterexample;  // absorbing set refuting the claim
};

// Recheck a certificate from scratch: regenerate (or digest-check a supplied
// instance), rebuild absorption with the general algorithm, and exhaustively
// test every candidate set of size optimum_at_least - 1.
inline VerifyResult verify(const Certificate& cert,
                           const ColouredTournament* instance = nullptr,
                           const BagLayout* layout = nullptr) {
    if (cert.n < 1 || cert.m < 1)
        throw ParseError("certificate has invalid parameters");
    if (cert.p != family_size(cert.n))
        return {false,
                "certificate claims p = " + std::to_string(cert.p) +
                    " but the family for n = " + std::to_string(cert.n) +
                    " has size " + std::to_string(family_size(cert.n)),
                {}};
    if (cert.optimum_at_least < 1 ||
        static_cast<std::uint64_t>(cert.optimum_at_least) > cert.p)
        return {false, "optimum-at-least must be in [1, p]", {}};

    std::optional<std::pair<ColouredTournament, BagLayout>> regenerated;
    const ColouredTournament* t = instance;
    const BagLayout* l = layout;
    if (t == nullptr) {
        regenerated = generate({cert.n, cert.m, cert.seed});
        t = &regenerated->first;
        l = &regenerated->second;
    }
    const std::uint64_t digest = fnv1a64(serialize(*t, l));
    if (digest != cert.instance_digest) {
        char got[17];
        std::snprintf(got, sizeof got, "%016llx",
                      static_cast<unsigned long long>(digest));
        throw DigestError(std::string("instance digest mismatch: recomputed ") +
                          got);
    }

    const int k = cert.optimum_at_least - 1;
    const int vertices = t->vertex_count();
    if (detail::binomial_estimate(static_cast<std::uint64_t>(vertices),
                                  static_cast<std::uint64_t>(k)) >
        detail::kRefutationGuard)
        throw GuardError("exhaustive refutation of size " + std::to_string(k) +
                         " exceeds the 1e8 candidate-set guard");

    const AbsorptionRelation rel = absorbed_by(*t);
    if (k == 0) return {true, "empty set absorbs nothing", {}};

    for (int size = 1; size <= k; ++size) {
        std::vector<VertexId> combo(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) combo[i] = i;
        for (;;) {
            if (is_absorbing(rel, combo))
                return {false, "claim refuted: an absorbing set of size " +
                                   std::to_string(size) + " exists",
                        combo};
            int i = size - 1;
            while (i >= 0 && combo[i] == vertices - (size - i)) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return {true,
            "no absorbing set of size " + std::to_string(k) + " among " +
                std::to_string(vertices) + " vertices",
            {}};
}

} // namespace abst

#endif
