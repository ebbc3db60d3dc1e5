#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "eic/gf2.hpp"

namespace eic {

/// One "node u needs block a" requirement. Ordered by (node, block); this is
/// the canonical vertex order used by every downstream module.
struct RequirementPair {
    std::size_t node = 0;
    std::size_t block = 0;
    auto operator<=>(const RequirementPair&) const = default;
};

/// An EIC instance: n nodes, m blocks, and the has/needs indicator matrices.
struct EicProblem {
    std::size_t n = 0;
    std::size_t m = 0;
    BitMatrix has;    // n x m, has.get(u, a): node u stores block a
    BitMatrix needs;  // n x m, needs.get(u, a): node u requests block a

    bool operator==(const EicProblem&) const = default;
};

struct ValidationIssue {
    enum class Kind { ShapeMismatch, OverlapSupport, UnsolvableBlock };
    Kind kind;
    std::size_t node = 0;   // unused for UnsolvableBlock
    std::size_t block = 0;
    std::string detail;
};

/// All violated invariants with coordinates; empty iff the problem is
/// well-formed and every request is servable by some other node.
std::vector<ValidationIssue> validate(const EicProblem& p);

bool is_valid(const EicProblem& p);

/// Throws ValidationError if validate(p) is nonempty.
void require_valid(const EicProblem& p);

/// All (u,a) with needs=1, sorted by (node, block).
std::vector<RequirementPair> requirement_pairs(const EicProblem& p);

/// True iff every node requests exactly one block and every requested block
/// is requested by exactly one node.
bool is_single_unicast(const EicProblem& p);

/// Builds the single-unicast problem for a side information digraph:
/// node i needs block i, and has block j iff edge (i -> j) is present.
/// Throws ValidationError if some vertex has out-degree 0.
EicProblem from_side_info_digraph(const std::vector<std::vector<std::size_t>>& out_edges);

/// JSON text format:
///   {"n":2,"m":2,"has":["01","10"],"needs":["10","01"]}
std::string serialize(const EicProblem& p);

/// Inverse of serialize. Throws ParseError on malformed text and
/// ValidationError if the parsed problem violates its invariants.
EicProblem parse_problem(const std::string& text);

}  // namespace eic
