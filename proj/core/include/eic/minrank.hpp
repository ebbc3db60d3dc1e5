#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eic/graph.hpp"
#include "eic/problem.hpp"

namespace eic {

/// Row-level description of the candidate matrices A (|P| x m): row (u,a) has
/// column a forced to 1, columns {b : B_ub = 1} free, everything else 0.
/// Every such A maps to a matrix fitting the problem graph under the column
/// repetition function.
struct FittingSpace {
    std::vector<RequirementPair> order;            // canonical vertex order
    std::size_t m = 0;
    std::vector<std::size_t> fixed_col;            // per row
    std::vector<std::vector<std::size_t>> free_cols;  // per row, sorted

    std::size_t log2_size() const {
        std::size_t s = 0;
        for (const auto& f : free_cols) s += f.size();
        return s;
    }
};

FittingSpace fitting_space(const EicProblem& p);

struct MinrankResult {
    std::size_t rank = 0;
    BitMatrix witness;                    // |P| x m, attains `rank`
    std::vector<std::size_t> basis_rows;  // first rank-many independent rows
    std::size_t lower_bound = 0;
    std::size_t upper_bound = 0;
    bool exact = false;
    std::uint64_t nodes_explored = 0;
};

struct MinrankLimits {
    std::size_t exact_log2_limit = 30;
    /// When set, the search stops after this many branch nodes and returns the
    /// best witness found so far flagged inexact (instead of failing on size).
    std::optional<std::uint64_t> node_budget;
};

/// Exact restricted minrank by depth-first search over the fitting space,
/// collapsing row choices that agree modulo the running basis. Throws
/// SizeLimitError when the space exceeds the exact limit and no budget is
/// given.
MinrankResult restricted_minrank(const EicProblem& p, MinrankLimits limits = {});

/// (independence-number lower bound, clique-cover upper bound). The upper
/// bound falls back to greedy coloring when the graph exceeds the exact
/// coloring cutoff.
std::pair<std::size_t, std::size_t> minrank_bounds(const EicProblem& p,
                                                   std::size_t chi_exact_limit = 20);

/// Clique-cover witness: rows are clique indicator vectors from a coloring of
/// the complement of the MutualEdges view. Always lies in the fitting space.
BitMatrix clique_cover_witness(const EicProblem& p, const ProblemGraph& g);

}  // namespace eic
