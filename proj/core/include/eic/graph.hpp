#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eic/problem.hpp"

namespace eic {

enum class EdgeKind : std::uint8_t {
    None = 0,
    Has = 1,        // tail's node holds the head's requested block
    SameBlock = 2,  // both vertices request the same block (always symmetric)
    Both = 3,
};

inline EdgeKind operator|(EdgeKind a, EdgeKind b) {
    return static_cast<EdgeKind>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
inline bool has_kind(EdgeKind e, EdgeKind k) {
    return (static_cast<std::uint8_t>(e) & static_cast<std::uint8_t>(k)) != 0;
}

/// Directed graph over requirement pairs. adj[i][j] is the label of the edge
/// i -> j (None if absent); no self-loops.
struct ProblemGraph {
    std::vector<RequirementPair> vertices;  // canonical (node, block) order
    std::vector<std::vector<EdgeKind>> adj;

    std::size_t size() const { return vertices.size(); }
    bool has_edge(std::size_t i, std::size_t j) const { return adj[i][j] != EdgeKind::None; }
};

enum class UndirectedMode { MutualEdges, AnyEdge };

/// Symmetric view of a ProblemGraph (or any small graph), adjacency stored as
/// one 64-bit mask per vertex. Exact clique/coloring searches run on this.
struct UndirectedView {
    std::size_t n = 0;
    std::vector<std::uint64_t> adj;  // adj[i] bit j: {i,j} adjacent
    UndirectedMode mode = UndirectedMode::AnyEdge;

    bool adjacent(std::size_t i, std::size_t j) const { return (adj[i] >> j) & 1u; }
    void add_edge(std::size_t i, std::size_t j) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }
};

UndirectedView make_undirected(std::size_t n, UndirectedMode mode);

ProblemGraph build_problem_graph(const EicProblem& p);

/// Vertex indices of { v_(w,b) : B_{ub} = 1 }, sorted ascending.
std::vector<std::size_t> sender_neighborhood(const ProblemGraph& g, const EicProblem& p,
                                             std::size_t u);

UndirectedView undirected_view(const ProblemGraph& g, UndirectedMode mode);

UndirectedView complement(const UndirectedView& h);

/// Subgraph induced by `verts` (sorted ascending); vertex i of the result is
/// verts[i].
UndirectedView induced_subgraph(const UndirectedView& h, const std::vector<std::size_t>& verts);

/// All inclusion-maximal cliques (isolated vertices as singletons), sorted by
/// size descending then lexicographically. Bron-Kerbosch with pivoting.
std::vector<std::vector<std::size_t>> maximal_cliques(const UndirectedView& h);

enum class ColorMode { Exact, Greedy };

struct ColoringResult {
    std::size_t colors = 0;
    std::vector<std::size_t> coloring;  // proper; colors in [0, colors)
    bool exact = false;
};

/// Exact mode: branch and bound with a clique lower bound; throws
/// SizeLimitError if h.n exceeds exact_limit. Greedy mode: largest-degree-
/// first sequential coloring (upper bound).
ColoringResult chromatic_number(const UndirectedView& h, ColorMode mode,
                                std::size_t exact_limit = 20);

/// Maximum clique size; throws SizeLimitError over `limit` vertices.
std::size_t clique_number(const UndirectedView& h, std::size_t limit = 24);

struct SeparationCheck {
    bool gap = false;          // (chi_any - 1) * chi_bar_mutual < vertices
    std::size_t chi_any = 0;   // chromatic number of the AnyEdge view
    std::size_t chi_bar_mutual = 0;  // chromatic number of complement(MutualEdges view)
    std::size_t vertices = 0;
};

/// When gap is true, the best centralized solution is strictly shorter than
/// the best task-based one.
SeparationCheck check_separation_condition(const ProblemGraph& g);

/// Graphviz DOT: vertices labeled "u:a", solid arrows for Has edges, dashed
/// undirected style for SameBlock pairs.
std::string to_dot(const ProblemGraph& g);

}  // namespace eic
