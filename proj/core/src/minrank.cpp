#include "eic/minrank.hpp"

#include <algorithm>

#include "eic/errors.hpp"

namespace eic {

FittingSpace fitting_space(const EicProblem& p) {
    FittingSpace fs;
    fs.order = requirement_pairs(p);
    fs.m = p.m;
    fs.fixed_col.reserve(fs.order.size());
    fs.free_cols.reserve(fs.order.size());
    for (const auto& [u, a] : fs.order) {
        fs.fixed_col.push_back(a);
        std::vector<std::size_t> free;
        for (std::size_t b = 0; b < p.m; ++b)
            if (p.has.get(u, b)) free.push_back(b);
        fs.free_cols.push_back(std::move(free));
    }
    return fs;
}

BitMatrix clique_cover_witness(const EicProblem& p, const ProblemGraph& g) {
    const auto mutual = undirected_view(g, UndirectedMode::MutualEdges);
    const auto comp = complement(mutual);
    ColoringResult coloring;
    if (comp.n <= 20) coloring = chromatic_number(comp, ColorMode::Exact);
    else coloring = chromatic_number(comp, ColorMode::Greedy);

    // One indicator row per colour class; each class is a mutual clique, so
    // every off-diagonal 1 of the row lands on a block its node holds.
    std::vector<BitVector> class_vec(coloring.colors, BitVector(p.m));
    for (std::size_t v = 0; v < g.size(); ++v)
        class_vec[coloring.coloring[v]].set(g.vertices[v].block, true);
    BitMatrix w(g.size(), p.m);
    for (std::size_t v = 0; v < g.size(); ++v)
        w.set_row(v, class_vec[coloring.coloring[v]]);
    return w;
}

namespace {

// One eliminated basis vector; `gens` tracks which free columns were XORed
// into the representative row that produced it (used only inside a coset).
struct BasisVec {
    BitVector vec;
    std::size_t pivot;
};

struct CosetVec {
    BitVector vec;      // reduced, nonzero, distinct pivot within the coset
    std::size_t pivot;
    BitVector gens;     // subset of [m]: actual free columns behind `vec`
};

BitVector reduce(BitVector v, const std::vector<BasisVec>& basis) {
    for (const auto& b : basis)
        if (v.get(b.pivot)) v ^= b.vec;
    return v;
}

struct MinrankSearch {
    const FittingSpace& fs;
    std::size_t best_rank;
    std::vector<BitVector> best_rows;
    std::size_t lower_bound;
    std::uint64_t budget;  // remaining branch nodes; 0 means exhausted
    bool aborted = false;
    std::uint64_t nodes = 0;

    std::vector<BasisVec> basis;
    std::vector<BitVector> chosen;

    void dfs(std::size_t row) {
        if (aborted || basis.size() >= best_rank || best_rank == lower_bound) return;
        if (row == fs.order.size()) {
            best_rank = basis.size();
            best_rows = chosen;
            return;
        }
        if (nodes++ >= budget) { aborted = true; return; }

        const std::size_t m = fs.m;
        BitVector e_fixed(m);
        e_fixed.set(fs.fixed_col[row], true);
        BitVector r0 = reduce(e_fixed, basis);

        // Independent residues of the free columns, with generator tracking.
        std::vector<CosetVec> coset;
        for (std::size_t b : fs.free_cols[row]) {
            BitVector eb(m);
            eb.set(b, true);
            BitVector v = reduce(eb, basis);
            BitVector gens(m);
            gens.set(b, true);
            for (const auto& c : coset)
                if (v.get(c.pivot)) { v ^= c.vec; gens ^= c.gens; }
            if (v.any()) coset.push_back({v, v.first_set(), std::move(gens)});
        }
        // Reduce r0 into the coset basis so mask 0 is the lowest-rank branch.
        BitVector g0(m);
        for (const auto& c : coset)
            if (r0.get(c.pivot)) { r0 ^= c.vec; g0 ^= c.gens; }

        const std::size_t dim = coset.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
            BitVector residue = r0;
            BitVector gens = g0;
            for (std::size_t t = 0; t < dim; ++t) {
                if ((mask >> t) & 1u) {
                    residue ^= coset[t].vec;
                    gens ^= coset[t].gens;
                }
            }
            BitVector actual = e_fixed ^ gens;
            chosen.push_back(actual);
            bool pushed = false;
            if (residue.any()) {
                basis.push_back({residue, residue.first_set()});
                pushed = true;
            }
            dfs(row + 1);
            if (pushed) basis.pop_back();
            chosen.pop_back();
            if (aborted || best_rank == lower_bound) return;
        }
    }
};

std::size_t independence_lower_bound(const ProblemGraph& g) {
    if (g.size() == 0) return 0;
    try {
        return std::max<std::size_t>(
            1, clique_number(complement(undirected_view(g, UndirectedMode::AnyEdge))));
    } catch (const SizeLimitError&) {
        return g.size() == 0 ? 0 : 1;
    }
}

std::vector<std::size_t> select_basis_rows(const BitMatrix& witness) {
    std::vector<BasisVec> basis;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < witness.rows(); ++r) {
        BitVector v = reduce(witness.row(r), basis);
        if (v.any()) {
            basis.push_back({v, v.first_set()});
            rows.push_back(r);
        }
    }
    return rows;
}

}  // namespace

MinrankResult restricted_minrank(const EicProblem& p, MinrankLimits limits) {
    require_valid(p);
    const FittingSpace fs = fitting_space(p);
    const ProblemGraph g = build_problem_graph(p);

    if (fs.log2_size() > limits.exact_log2_limit && !limits.node_budget)
        throw SizeLimitError("fitting space has 2^" + std::to_string(fs.log2_size()) +
                             " matrices, exceeding the exact limit of 2^" +
                             std::to_string(limits.exact_log2_limit) +
                             "; pass a node budget for an inexact upper bound");

    MinrankResult res;
    res.witness = clique_cover_witness(p, g);
    res.upper_bound = rank(res.witness);
    res.lower_bound = independence_lower_bound(g);

    MinrankSearch search{fs, res.upper_bound, {}, res.lower_bound,
                         limits.node_budget.value_or(UINT64_MAX)};
    for (std::size_t r = 0; r < res.witness.rows(); ++r)
        search.best_rows.push_back(res.witness.row(r));
    search.dfs(0);

    res.rank = search.best_rank;
    BitMatrix w(fs.order.size(), fs.m);
    for (std::size_t r = 0; r < search.best_rows.size(); ++r)
        w.set_row(r, search.best_rows[r]);
    // Saturate free bits where the rank allows it: among equal-rank witnesses
    // prefer the one folding in the most side information.
    for (std::size_t r = 0; r < fs.order.size(); ++r) {
        for (std::size_t b : fs.free_cols[r]) {
            if (w.get(r, b)) continue;
            w.set(r, b, true);
            if (rank(w) != res.rank) w.set(r, b, false);
        }
    }
    res.witness = std::move(w);
    res.basis_rows = select_basis_rows(res.witness);
    res.exact = !search.aborted;
    res.nodes_explored = search.nodes;
    return res;
}

std::pair<std::size_t, std::size_t> minrank_bounds(const EicProblem& p,
                                                   std::size_t chi_exact_limit) {
    require_valid(p);
    const ProblemGraph g = build_problem_graph(p);
    const std::size_t lower =
        clique_number(complement(undirected_view(g, UndirectedMode::AnyEdge)));
    const auto comp = complement(undirected_view(g, UndirectedMode::MutualEdges));
    ColoringResult coloring;
    if (comp.n <= chi_exact_limit)
        coloring = chromatic_number(comp, ColorMode::Exact, chi_exact_limit);
    else
        coloring = chromatic_number(comp, ColorMode::Greedy);
    return {lower, coloring.colors};
}

}  // namespace eic
