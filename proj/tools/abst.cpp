// abst — generate, solve and certify arc-coloured tournament instances.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abst/absorption.hpp"
#include "abst/bounds.hpp"
#include "abst/construction.hpp"
#include "abst/io.hpp"
#include "abst/solver.hpp"
#include "abst/tournament.hpp"
#include "abst/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitRefuted = 4;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw abst::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw abst::ParseError("cannot write '" + path + "'");
    out << text;
}

// Log values print with 6 significant digits; the zero-probability sentinel
// prints as a word.
std::string fmt_log(double v) {
    if (v == abst::kCertainZero) return "certain-zero";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<abst::VertexId> parse_id_list(const std::string& text) {
    std::vector<abst::VertexId> ids;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw abst::ParseError("empty id in set '" + text + "'");
        try {
            std::size_t pos = 0;
            ids.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw abst::ParseError("bad vertex id '" + item + "'");
        }
    }
    return ids;
}

std::string join_ids(const std::vector<abst::VertexId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ids[i]);
    }
    return out;
}

int cmd_gen(int n, int m, std::uint64_t seed, int max_vertices,
            const std::string& out_path) {
    auto [t, layout] = abst::generate({n, m, seed, max_vertices});
    const std::string text = abst::serialize(t, &layout);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    const abst::ParsedInstance inst = abst::parse(read_file(path));
    std::cout << "tournament well-formed: " << inst.tournament.vertex_count()
              << " vertices, " << inst.tournament.colour_count() << " colours\n";
    if (!inst.layout) {
        std::cout << "no bag metadata, construction rule not checked\n";
        return kExitOk;
    }
    const abst::StructureReport report =
        abst::validate_structure(inst.tournament, *inst.layout);
    if (report.ok()) {
        std::cout << "construction rule: pass (" << inst.layout->bag_count()
                  << " bags x " << inst.layout->copies << " copies)\n";
        return kExitOk;
    }
    std::cout << "construction rule: fail, " << report.violations.size()
              << " violation(s)\n";
    for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
    return kExitRefuted;
}

int cmd_absorb(const std::string& path, int colour, bool stats) {
    const abst::ParsedInstance inst = abst::parse(read_file(path));
    const int n = inst.tournament.vertex_count();
    if (colour != 0) {
        const auto reach = abst::monochromatic_reachability(inst.tournament, colour);
        std::size_t pairs = 0;
        for (int x = 0; x < n; ++x) pairs += reach[x].count() - 1;
        std::cout << "colour " << colour << ": "
                  << inst.tournament.colour_subgraph(colour).size() << " arcs, "
                  << pairs << " reachable pairs\n";
        return kExitOk;
    }
    const abst::AbsorptionRelation rel = abst::absorbed_by(inst.tournament);
    std::cout << "vertices " << n << "\n";
    std::cout << "absorbed-pairs " << rel.pair_count() << "\n";
    if (stats) {
        std::map<std::size_t, int> histogram;
        for (const abst::Bitset& cover : rel.covers) ++histogram[cover.count()];
        std::cout << "coverage-size histogram:\n";
        for (const auto& [size, count] : histogram)
            std::cout << "  " << size << " " << count << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& set_text) {
    const abst::ParsedInstance inst = abst::parse(read_file(path));
    const std::vector<abst::VertexId> ids = parse_id_list(set_text);
    const abst::AbsorptionRelation rel = abst::absorbed_by(inst.tournament);
    bool absorbing;
    try {
        absorbing = abst::is_absorbing(rel, ids);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    std::cout << "set {" << join_ids(ids) << "} absorbing: "
              << (absorbing ? "yes" : "no") << "\n";
    return absorbing ? kExitOk : kExitRefuted;
}

int cmd_solve(const std::string& path, std::uint64_t budget, bool brute) {
    const abst::ParsedInstance inst = abst::parse(read_file(path));
    const abst::AbsorptionRelation rel = abst::absorbed_by(inst.tournament);
    const abst::SolveResult result = brute
                                         ? abst::min_absorbing_brute(rel)
                                         : abst::min_absorbing_set_exact(rel, budget);
    std::cout << "optimum " << result.optimum << "\n";
    std::cout << "witness " << join_ids(result.witness) << "\n";
    std::cout << "nodes " << result.nodes_explored << "\n";
    std::cout << "proved-optimal " << (result.proved_optimal ? "yes" : "no") << "\n";
    return result.proved_optimal ? kExitOk : kExitBudget;
}

int cmd_bounds(int n, std::uint64_t m, bool have_m, bool sweep, int sweep_lo,
               int sweep_hi) {
    if (sweep) {
        std::printf("%-4s %-22s %s\n", "n", "p", "stirling-ratio");
        for (int i = sweep_lo; i <= sweep_hi; ++i)
            std::printf("%-4d %-22llu %s\n", i,
                        static_cast<unsigned long long>(abst::family_size(i)),
                        fmt_log(abst::stirling_ratio(i)).c_str());
        return kExitOk;
    }
    const std::uint64_t p = abst::family_size(n);
    const std::uint64_t m_union = abst::minimal_m(p, abst::BoundKind::Union);
    const std::uint64_t m_relaxed = abst::minimal_m(p, abst::BoundKind::Relaxed);
    const std::uint64_t m_used = have_m ? m : m_union;
    const abst::BoundReport report = abst::make_bound_report(p, m_used);
    std::printf("%-22s %llu\n", "p", static_cast<unsigned long long>(p));
    std::printf("%-22s %llu\n", "m", static_cast<unsigned long long>(m_used));
    std::printf("%-22s %s\n", "log-union-bound", fmt_log(report.log_union_bound).c_str());
    std::printf("%-22s %s\n", "log-relaxed-bound", fmt_log(report.log_relaxed_bound).c_str());
    std::printf("%-22s %s\n", "certifies-existence",
                report.certifies_existence ? "yes" : "no");
    std::printf("%-22s %llu\n", "minimal-m-union",
                static_cast<unsigned long long>(m_union));
    std::printf("%-22s %llu\n", "minimal-m-relaxed",
                static_cast<unsigned long long>(m_relaxed));
    return kExitOk;
}

int cmd_hunt(int n, int m, std::uint64_t seed_start, int trials, int jobs,
             std::uint64_t budget, const std::string& out_path) {
    const abst::HuntResult result =
        abst::hunt(n, m, seed_start, trials, jobs, budget);
    for (const abst::TrialOutcome& trial : result.trials)
        std::cout << "seed " << trial.seed << ": " << trial.outcome << "\n";
    if (!result.certificate) {
        std::cout << "no certificate after " << result.trials.size()
                  << " trial(s)\n";
        return kExitBudget;
    }
    const std::string text = abst::serialize_certificate(*result.certificate);
    std::cout << text;
    if (!out_path.empty()) write_file(out_path, text);
    return kExitOk;
}

int cmd_verify_cert(const std::string& cert_path, const std::string& instance_path) {
    const abst::Certificate cert = abst::parse_certificate(read_file(cert_path));
    abst::VerifyResult result;
    if (instance_path.empty()) {
        result = abst::verify(cert);
    } else {
        const abst::ParsedInstance inst = abst::parse(read_file(instance_path));
        result = abst::verify(cert, &inst.tournament,
                              inst.layout ? &*inst.layout : nullptr);
    }
    std::cout << (result.ok ? "certificate holds: " : "certificate fails: ")
              << result.reason << "\n";
    if (!result.counterexample.empty())
        std::cout << "counterexample " << join_ids(result.counterexample) << "\n";
    return result.ok ? kExitOk : kExitRefuted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"absorbing sets in arc-coloured tournaments"};
    app.require_subcommand(1);

    int n = 1, m = 1, max_vertices = 20000, trials = 10, jobs = 1;
    int colour = 0;
    std::uint64_t seed = 1, seed_start = 1, budget = abst::kDefaultNodeBudget;
    std::uint64_t bounds_m = 1;
    std::string file, out_path, set_text, instance_path;
    bool stats = false, brute = false;
    std::vector<int> sweep_range;

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--n", n, "colour count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--m", m, "copies per bag")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--max-vertices", max_vertices, "size cap");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* validate = app.add_subcommand("validate", "check an instance file");
    validate->add_option("file", file, "instance file ('-' for stdin)")->required();

    CLI::App* absorb = app.add_subcommand("absorb", "absorption relation statistics");
    absorb->add_option("file", file)->required();
    absorb->add_option("--colour", colour, "restrict to one colour")
        ->check(CLI::PositiveNumber);
    absorb->add_flag("--stats", stats, "print the coverage-size histogram");

    CLI::App* check = app.add_subcommand("check", "test a candidate absorbing set");
    check->add_option("file", file)->required();
    check->add_option("-S,--set", set_text, "comma-separated vertex ids")->required();

    CLI::App* solve = app.add_subcommand("solve", "minimum absorbing set");
    solve->add_option("file", file)->required();
    solve->add_option("--budget", budget, "branch-and-bound node budget");
    solve->add_flag("--brute", brute, "use the brute-force oracle (N <= 20)");

    CLI::App* bounds = app.add_subcommand("bounds", "probability bound report");
    bounds->add_option("--n", n, "colour count")->check(CLI::PositiveNumber);
    CLI::Option* m_opt = bounds->add_option("--m", bounds_m, "copies per bag")
                             ->check(CLI::PositiveNumber);
    bounds->add_option("--sweep", sweep_range, "Stirling-ratio table over [a, b]")
        ->expected(2);

    CLI::App* hunt = app.add_subcommand("hunt", "search seeds for a certificate");
    hunt->add_option("--n", n, "colour count")->required()->check(CLI::PositiveNumber);
    hunt->add_option("--m", m, "copies per bag")->required()->check(CLI::PositiveNumber);
    hunt->add_option("--seed-start", seed_start, "first seed to try");
    hunt->add_option("--trials", trials, "number of seeds to try")
        ->check(CLI::PositiveNumber);
    hunt->add_option("--jobs", jobs, "parallel trials")->check(CLI::PositiveNumber);
    hunt->add_option("--budget", budget, "per-trial node budget");
    hunt->add_option("-o,--output", out_path, "certificate output file");

    CLI::App* verify_cert = app.add_subcommand("verify-cert", "recheck a certificate");
    verify_cert->add_option("cert", file, "certificate file")->required();
    verify_cert->add_option("--instance", instance_path, "stored instance to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(n, m, seed, max_vertices, out_path);
        if (validate->parsed()) return cmd_validate(file);
        if (absorb->parsed()) return cmd_absorb(file, colour, stats);
        if (check->parsed()) return cmd_check(file, set_text);
        if (solve->parsed()) return cmd_solve(file, budget, brute);
        if (bounds->parsed()) {
            const bool sweep = sweep_range.size() == 2;
            if (!sweep && bounds->count("--n") == 0) {
                std::cerr << "error: bounds needs --n or --sweep\n";
                return kExitUsage;
            }
            return cmd_bounds(n, bounds_m, m_opt->count() > 0, sweep,
                              sweep ? sweep_range[0] : 0,
                              sweep ? sweep_range[1] : 0);
        }
        if (hunt->parsed())
            return cmd_hunt(n, m, seed_start, trials, jobs, budget, out_path);
        if (verify_cert->parsed()) return cmd_verify_cert(file, instance_path);
    } catch (const abst::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const abst::BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const abst::DigestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const abst::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitUsage;
}
