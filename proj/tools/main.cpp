#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "eic/errors.hpp"
#include "eic/experiments.hpp"
#include "eic/gen.hpp"
#include "eic/graph.hpp"
#include "eic/minrank.hpp"
#include "eic/problem.hpp"
#include "eic/solve.hpp"
#include "eic/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw eic::ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw eic::ParseError("cannot write " + path);
    out << data;
}

// Data goes to --out when given, else to stdout; diagnostics go to stderr.
void emit(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) std::cout << data;
    else write_file(out_path, data);
}

struct LimitFlags {
    std::size_t exact_log2 = 30;
    std::optional<std::uint64_t> node_budget;

    eic::MinrankLimits to_limits() const { return {exact_log2, node_budget}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--limit-exact-log2", exact_log2,
                        "largest log2 fitting-space size solved exactly");
        cmd->add_option("--limit-node-budget", node_budget,
                        "branch-node budget; enables inexact mode past the exact limit");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"embedded index coding toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::size_t gen_n = 5, gen_m = 5;
    double gen_p = 0.5, gen_p_has = 0.5, gen_p_need = 0.3;
    std::uint64_t gen_seed = 0;
    std::size_t gen_resamples = 10000;
    bool gen_general_mode = false;
    std::string gen_out;
    gen->add_option("--n", gen_n, "node count")->required();
    gen->add_option("--p", gen_p, "edge probability (single-unicast mode)");
    gen->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen->add_flag("--general", gen_general_mode, "general instances instead of single-unicast");
    gen->add_option("--m", gen_m, "block count (general mode)");
    gen->add_option("--p-has", gen_p_has, "per-cell has probability (general mode)");
    gen->add_option("--p-need", gen_p_need, "per-cell needs probability (general mode)");
    gen->add_option("--max-resamples", gen_resamples, "resample limit");
    gen->add_option("--out", gen_out, "output problem file (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance");
    std::string solve_mode = "centralized", solve_in, solve_out;
    bool solve_exact_cover = false;
    LimitFlags solve_limits;
    solve->add_option("--mode", solve_mode, "centralized | decentralized | task")
        ->check(CLI::IsMember({"centralized", "decentralized", "task"}));
    solve->add_option("problem", solve_in, "problem JSON file")->required();
    solve->add_option("--out", solve_out, "output solution file (default stdout)");
    solve->add_flag("--exact-cover", solve_exact_cover,
                    "exact minimum clique cover in task mode (small inputs)");
    solve_limits.attach(solve);

    // minrank
    auto* minrank = app.add_subcommand("minrank", "restricted minrank with bounds");
    std::string minrank_in;
    LimitFlags minrank_limits;
    std::size_t limit_chi = 20;
    minrank->add_option("problem", minrank_in, "problem JSON file")->required();
    minrank->add_option("--limit-chi-exact", limit_chi,
                        "largest vertex count colored exactly for the upper bound");
    minrank_limits.attach(minrank);

    // verify
    auto* verify = app.add_subcommand("verify", "verify a solution file");
    std::string verify_problem, verify_solution, verify_format = "text";
    verify->add_option("problem", verify_problem, "problem JSON file")->required();
    verify->add_option("solution", verify_solution, "solution JSON file")->required();
    verify->add_option("--format", verify_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run a solution on random payloads");
    std::string sim_problem, sim_solution;
    std::size_t sim_ell = 8;
    std::uint64_t sim_seed = 0;
    simulate->add_option("problem", sim_problem, "problem JSON file")->required();
    simulate->add_option("solution", sim_solution, "solution JSON file")->required();
    simulate->add_option("--ell", sim_ell, "payload bits per block")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_seed, "payload PRNG seed")->required();

    // graph
    auto* graph = app.add_subcommand("graph", "emit the problem graph as DOT");
    std::string graph_in, graph_out;
    graph->add_option("problem", graph_in, "problem JSON file")->required();
    graph->add_option("--out", graph_out, "output DOT file (default stdout)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run an experiment sweep");
    std::string exp_kind, exp_out;
    std::vector<std::size_t> exp_ns;
    std::vector<double> exp_ps;
    std::size_t exp_trials = 20, exp_jobs = 0;
    std::uint64_t exp_seed = 0;
    LimitFlags exp_limits;
    experiment->add_option("kind", exp_kind, "search-ratio | cost-ratio")
        ->required()
        ->check(CLI::IsMember({"search-ratio", "cost-ratio"}));
    experiment->add_option("--ns", exp_ns, "node counts")->required()->delimiter(',');
    experiment->add_option("--ps", exp_ps, "edge probabilities")->required()->delimiter(',');
    experiment->add_option("--trials", exp_trials, "trials per (n, p)");
    experiment->add_option("--seed", exp_seed, "experiment seed")->required();
    experiment->add_option("--jobs", exp_jobs, "trial parallelism (0 = all cores)");
    experiment->add_option("--out", exp_out, "output CSV file (default stdout)");
    exp_limits.attach(experiment);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (gen->parsed()) {
        eic::EicProblem p =
            gen_general_mode
                ? eic::gen_general(gen_n, gen_m, gen_p_has, gen_p_need, gen_seed, gen_resamples)
                : eic::gen_erdos_renyi_single_unicast({gen_n, gen_p, gen_seed, gen_resamples});
        emit(gen_out, eic::serialize(p) + "\n");
        std::cerr << "n=" << p.n << " m=" << p.m << " pairs=" << eic::requirement_pairs(p).size()
                  << " single_unicast=" << (eic::is_single_unicast(p) ? "true" : "false")
                  << "\n";
        return kExitOk;
    }

    if (solve->parsed()) {
        const eic::EicProblem p = eic::parse_problem(read_file(solve_in));
        std::string out;
        if (solve_mode == "centralized") {
            const auto s = eic::solve_centralized(p, solve_limits.to_limits());
            const auto rep = eic::verify_centralized(p, s);
            if (!rep.ok) {
                std::cerr << rep.to_text();
                return kExitVerifyFail;
            }
            std::cerr << "length=" << s.length() << " exact=" << (s.exact ? "true" : "false")
                      << "\n";
            out = eic::serialize_solution(s);
        } else if (solve_mode == "decentralized") {
            const auto s = eic::solve_decentralized_2x(p, solve_limits.to_limits());
            const auto rep = eic::verify_solution(p, s);
            if (!rep.ok) {
                std::cerr << rep.to_text();
                return kExitVerifyFail;
            }
            std::cerr << "length=" << s.length() << " exact=" << (s.exact ? "true" : "false")
                      << "\n";
            out = eic::serialize_solution(s);
        } else {
            const auto s =
                eic::solve_task_based(p, {solve_limits.to_limits(), solve_exact_cover});
            const auto rep = eic::verify_task_based(p, s);
            if (!rep.ok) {
                std::cerr << rep.to_text();
                return kExitVerifyFail;
            }
            std::cerr << "length=" << s.length() << " exact=" << (s.exact ? "true" : "false")
                      << "\n";
            for (std::size_t i = 0; i < s.partition.sets.size(); ++i) {
                if (s.partition.sets[i].empty()) continue;
                std::cerr << "sender " << i << ":";
                for (std::size_t v : s.partition.sets[i]) std::cerr << " v" << v;
                std::cerr << "\n";
            }
            out = eic::serialize_solution(s);
        }
        emit(solve_out, out + "\n");
        return kExitOk;
    }

    if (minrank->parsed()) {
        const eic::EicProblem p = eic::parse_problem(read_file(minrank_in));
        const auto mr = eic::restricted_minrank(p, minrank_limits.to_limits());
        const auto [lo, hi] = eic::minrank_bounds(p, limit_chi);
        std::cout << "rank=" << mr.rank << " lower=" << lo << " upper=" << hi
                  << " exact=" << (mr.exact ? "true" : "false") << "\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        const eic::EicProblem p = eic::parse_problem(read_file(verify_problem));
        const auto sol = eic::parse_solution(read_file(verify_solution), p);
        eic::VerificationReport rep;
        switch (sol.type) {
            case eic::SolutionType::Centralized:
                rep = eic::verify_centralized(p, *sol.centralized);
                break;
            case eic::SolutionType::Decentralized:
                rep = eic::verify_solution(p, *sol.decentralized);
                break;
            case eic::SolutionType::TaskBased:
                rep = eic::verify_task_based(p, *sol.task_based);
                break;
        }
        std::cout << (verify_format == "json" ? rep.to_json() + "\n" : rep.to_text());
        return rep.ok ? kExitOk : kExitVerifyFail;
    }

    if (simulate->parsed()) {
        const eic::EicProblem p = eic::parse_problem(read_file(sim_problem));
        const auto sol = eic::parse_solution(read_file(sim_solution), p);
        eic::Xoshiro256 rng(sim_seed);
        std::vector<eic::BitVector> blocks;
        for (std::size_t b = 0; b < p.m; ++b) {
            eic::BitVector v(sim_ell);
            for (std::size_t i = 0; i < sim_ell; ++i) v.set(i, rng.next() & 1u);
            blocks.push_back(std::move(v));
        }
        const eic::DataBlocks d = eic::make_data_blocks(std::move(blocks), p.m);
        std::map<eic::RequirementPair, eic::BitVector> decoded;
        try {
            switch (sol.type) {
                case eic::SolutionType::Centralized:
                    decoded = eic::simulate(p, *sol.centralized, d);
                    break;
                case eic::SolutionType::Decentralized:
                    decoded = eic::simulate(p, *sol.decentralized, d);
                    break;
                case eic::SolutionType::TaskBased:
                    decoded = eic::simulate(p, *sol.task_based, d);
                    break;
            }
        } catch (const eic::ValidationError& e) {
            std::cerr << e.what() << "\n";
            return kExitVerifyFail;
        }
        bool all_ok = true;
        for (const auto& [pr, bits] : decoded) {
            const bool ok = bits == d.blocks[pr.block];
            all_ok = all_ok && ok;
            std::cout << pr.node << ":" << pr.block << " " << (ok ? "ok" : "MISMATCH") << "\n";
        }
        return all_ok ? kExitOk : kExitVerifyFail;
    }

    if (graph->parsed()) {
        const eic::EicProblem p = eic::parse_problem(read_file(graph_in));
        emit(graph_out, eic::to_dot(eic::build_problem_graph(p)));
        return kExitOk;
    }

    if (experiment->parsed()) {
        eic::ExperimentConfig cfg{exp_ns, exp_ps, exp_trials, exp_seed,
                                  exp_jobs ? exp_jobs
                                           : std::max(1u, std::thread::hardware_concurrency())};
        const eic::ExperimentResult res =
            exp_kind == "search-ratio"
                ? eic::run_search_ratio_experiment(cfg)
                : eic::run_cost_ratio_experiment(cfg, exp_limits.to_limits());
        emit(exp_out, res.csv);
        if (!exp_out.empty()) write_file(exp_out + ".config.json", res.config_json + "\n");
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const eic::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const eic::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eic::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eic::GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
