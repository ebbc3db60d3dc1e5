#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eic/minrank.hpp"
#include "eic/problem.hpp"

namespace eic {

/// Per-sender broadcast matrices plus a decoding plan over the stacked matrix
/// [beta^(1); ...; beta^(n); diag(B_u)].
struct LinearBroadcastSolution {
    std::vector<BitMatrix> beta;  // one h_u x m matrix per node (h_u may be 0)
    std::map<RequirementPair, BitVector> decoding;
    bool exact = true;  // whether the underlying minrank was exact

    std::size_t length() const {
        std::size_t s = 0;
        for (const auto& b : beta) s += b.rows();
        return s;
    }
};

/// Omniscient-sender solution; decoding is over [beta; diag(B_u)].
struct CentralizedSolution {
    BitMatrix beta;  // h x m
    std::map<RequirementPair, BitVector> decoding;
    bool exact = true;

    std::size_t length() const { return beta.rows(); }
};

/// Disjoint assignment of problem-graph vertices to responsible senders.
struct NeighborhoodPartition {
    std::vector<std::vector<std::size_t>> sets;  // per sender, sorted vertex indices
};

/// Task-based solution: each pair decodes from its responsible sender's rows
/// alone; decoding is over [beta^(i); diag(B_u)] for the responsible i.
struct TaskBasedSolution {
    NeighborhoodPartition partition;
    std::vector<BitMatrix> beta;
    std::map<RequirementPair, BitVector> decoding;
    std::map<RequirementPair, std::size_t> responsible;
    bool exact = true;

    std::size_t length() const {
        std::size_t s = 0;
        for (const auto& b : beta) s += b.rows();
        return s;
    }
};

/// Sub-EIC induced by a vertex subset: needs restricted to those pairs, has
/// masked to the blocks requested inside the subset.
EicProblem induced_subproblem(const EicProblem& p, const ProblemGraph& g,
                              const std::vector<std::size_t>& vertices);

/// Optimal centralized solution: beta = basis rows of a minimum-rank fitting
/// witness; length equals the restricted minrank in exact mode.
CentralizedSolution solve_centralized(const EicProblem& p, MinrankLimits limits = {});

/// Factor-2 decentralized construction: per basis row (u,a), node u sends the
/// row minus e_a and the lowest-index holder of a sends e_a uncoded (one
/// uncoded broadcast per block, shared across rows).
LinearBroadcastSolution solve_decentralized_2x(const EicProblem& p, MinrankLimits limits = {});

/// Greedy cover of `universe` by `sets`: repeatedly pick the set covering the
/// most uncovered elements, first-listed set on ties. Returns chosen indices.
/// Throws ValidationError naming an uncoverable element.
std::vector<std::size_t> greedy_min_cover(const std::vector<std::size_t>& universe,
                                          const std::vector<std::vector<std::size_t>>& sets);

/// Exact minimum cover by branch and bound; limited to `max_sets` sets.
std::vector<std::size_t> exact_min_cover(const std::vector<std::size_t>& universe,
                                         const std::vector<std::vector<std::size_t>>& sets,
                                         std::size_t max_sets = 20);

struct TaskSolveOptions {
    MinrankLimits minrank;
    bool exact_cover = false;  // exact min-cover instead of greedy (small inputs)
};

/// Neighborhood-clique cover heuristic: maximal cliques of each sender
/// neighborhood, min-cover over them, disjointness repair, then one
/// centralized subproblem per responsible sender.
TaskBasedSolution solve_task_based(const EicProblem& p, TaskSolveOptions opts = {});

struct TaskOracleLimits {
    std::size_t max_pairs = 8;
    std::uint64_t max_assignments = 1'000'000;
};

/// Exact (T): minimum over all neighborhood partitions of the sum of
/// per-subproblem restricted minranks.
std::pair<std::size_t, NeighborhoodPartition> exact_task_based_optimal(
    const EicProblem& p, TaskOracleLimits limits = {});

struct DecentralizedOracleLimits {
    std::size_t max_has_bits = 12;  // sum over nodes of blocks held
    std::size_t max_length = 6;
};

/// Exact (D): smallest number of sender-constructible broadcast vectors that
/// lets every pair decode; iterative deepening over the length.
std::size_t exact_decentralized_optimal(const EicProblem& p,
                                        DecentralizedOracleLimits limits = {});

/// Converts a task-based solution to the general per-sender form (decoding
/// vectors re-indexed over the full stacked matrix).
LinearBroadcastSolution to_linear(const TaskBasedSolution& s, const EicProblem& p);

// --- solution file format -------------------------------------------------

enum class SolutionType { Centralized, Decentralized, TaskBased };

struct SolutionFile {
    SolutionType type;
    std::optional<CentralizedSolution> centralized;
    std::optional<LinearBroadcastSolution> decentralized;
    std::optional<TaskBasedSolution> task_based;
};

std::string serialize_solution(const CentralizedSolution& s);
std::string serialize_solution(const LinearBroadcastSolution& s);
std::string serialize_solution(const TaskBasedSolution& s);

/// Throws ParseError on malformed text.
SolutionFile parse_solution(const std::string& text, const EicProblem& p);

}  // namespace eic
