#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eic/minrank.hpp"
#include "eic/problem.hpp"

namespace eic {

/// log2 search-space sizes for the three methods on one instance, with the
/// per-node has-counts n_k and redundant-row counts n_k_c feeding the third.
struct SearchSpaceSizes {
    double log2_eic = 0.0;
    double log2_kim = 0.0;
    double log2_ltcmar = 0.0;
    std::vector<std::size_t> n_k;
    std::vector<std::size_t> n_k_c;
};

/// Sum over requirement pairs of the requesting node's has-count; equals the
/// fitting-space log-size, and sum_k n_k in the single-unicast case.
std::size_t search_space_eic(const EicProblem& p);

/// sum_k sum_k' |R_k (.) (B_k' OR R_k')|_1. Single-unicast only; the OR
/// reading is safe because has/needs supports are disjoint.
std::size_t search_space_kim(const EicProblem& p);

/// sum_k (n_k^2+n_k)/2 - sum_k (n_k_c^2+n_k_c)/2, clamped at 0. Single-unicast
/// only. n_k_c is a reproducible stand-in for the external redundancy
/// procedure: a weak sender (holdings a strict subset of another sender's, or
/// equal with a lower-indexed one) has all n_k rows counted redundant; other
/// senders count 0. Returns (log2 size, n_k_c per sender).
std::pair<double, std::vector<std::size_t>> search_space_ltcmar(const EicProblem& p);

/// All three on one instance (single-unicast only).
SearchSpaceSizes search_space_sizes(const EicProblem& p);

struct ExperimentConfig {
    std::vector<std::size_t> ns;
    std::vector<double> ps;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;  // trial-level parallelism; results independent of it
};

struct TrialRecord {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;  // derived per-trial stream
    std::size_t trial = 0;
    bool failed = false;
    std::string failure;

    std::size_t c_exact = 0;
    std::size_t d_alg1 = 0;
    std::size_t t_alg2 = 0;
    bool c_is_exact = false;
    bool t_is_exact = false;

    double log2_eic = 0.0;
    double log2_ltcmar = 0.0;

    double micros = 0.0;  // wall clock, recorded but never asserted
};

struct ExperimentResult {
    std::string csv;           // header row; floats with 6 decimals
    std::string config_json;   // config echoed as a sidecar
    std::vector<TrialRecord> records;  // sorted by (n, p, trial)
};

/// Per-trial seed stream: a splitmix64 chain over (seed, n, p-index, trial),
/// so trials are decoupled from scheduling and job count.
std::uint64_t derive_trial_seed(std::uint64_t seed, std::size_t n, std::size_t p_index,
                                std::size_t trial);

/// Mean/min/max of log2_ltcmar / log2_eic per (n, p) over Erdos-Renyi
/// single-unicast instances. Columns: n,p,trials,mean_ratio,min_ratio,
/// max_ratio,seed,failures.
ExperimentResult run_search_ratio_experiment(const ExperimentConfig& cfg);

/// Mean/max of task-based length over exact restricted minrank per (n, p).
/// Columns: n,p,trials,mean_ratio,max_ratio,seed,failures. Per-trial size
/// errors are excluded from the means and counted as failures.
ExperimentResult run_cost_ratio_experiment(const ExperimentConfig& cfg,
                                           MinrankLimits limits = {});

}  // namespace eic
