#include <doctest.h>

#include "common.hpp"
#include "eic/errors.hpp"
#include "eic/minrank.hpp"

using namespace eic;
using namespace eic::testing;

namespace {

// Applies the column repetition map and checks the result fits the problem
// graph: diagonal ones, zeros where there is no edge.
bool witness_fits(const EicProblem& p, const BitMatrix& w) {
    const ProblemGraph g = build_problem_graph(p);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            const bool bit = w.get(i, g.vertices[j].block);
            if (i == j && !bit) return false;
            if (i != j && bit && !g.has_edge(i, j)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("fitting_space shapes") {
    const FittingSpace s2 = fitting_space(swap2());
    REQUIRE(s2.order.size() == 2);
    CHECK(s2.fixed_col == std::vector<std::size_t>{0, 1});
    CHECK(s2.free_cols[0] == std::vector<std::size_t>{1});
    CHECK(s2.free_cols[1] == std::vector<std::size_t>{0});
    CHECK(s2.log2_size() == 2);

    CHECK(fitting_space(clique3()).log2_size() == 6);

    const FittingSpace f = fitting_space(hub4());
    CHECK(f.free_cols[0].size() == 2);
    CHECK(f.free_cols[1].size() == 1);
    CHECK(f.free_cols[2].size() == 1);
    CHECK(f.free_cols[3].size() == 3);
    CHECK(f.log2_size() == 7);
}

TEST_CASE("restricted_minrank on the worked instances") {
    auto r = restricted_minrank(swap2());
    CHECK(r.rank == 1);
    CHECK(r.exact);
    CHECK(r.witness == BitMatrix::from_strings({"11", "11"}));
    CHECK(witness_fits(swap2(), r.witness));

    r = restricted_minrank(cycle3());
    CHECK(r.rank == 2);
    CHECK(r.exact);
    CHECK(witness_fits(cycle3(), r.witness));

    r = restricted_minrank(clique3());
    CHECK(r.rank == 1);
    CHECK(witness_fits(clique3(), r.witness));
}

TEST_CASE("acyclic chain forces full rank") {
    // problem graph is the chain (0,0) -> (1,1) -> (2,2): node 0 holds b1,
    // node 1 holds b2, block b0 sits on node 3 which requests nothing, so no
    // back edges arise and no coding is possible.
    const EicProblem chain{4, 3,
                           BitMatrix::from_strings({"010", "001", "000", "100"}),
                           BitMatrix::from_strings({"100", "010", "001", "000"})};
    const auto r = restricted_minrank(chain);
    CHECK(r.rank == 3);
    CHECK(r.exact);
}

TEST_CASE("minrank_bounds") {
    CHECK(minrank_bounds(clique3()) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(minrank_bounds(cycle3()) == std::pair<std::size_t, std::size_t>{1, 3});

    // edgeless 4-vertex problem graph: the four requesters hold nothing, and
    // a fifth node holding every block (requesting none) keeps it solvable
    EicProblem star{5, 4,
                    BitMatrix::from_strings({"0000", "0000", "0000", "0000", "1111"}),
                    BitMatrix::from_strings({"1000", "0100", "0010", "0001", "0000"})};
    CHECK(minrank_bounds(star) == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(restricted_minrank(star).rank == 4);
}

TEST_CASE("sandwich on the fixtures") {
    for (const EicProblem& p : {swap2(), clique3(), cycle3(), hub4()}) {
        const auto [lo, hi] = minrank_bounds(p);
        const auto r = restricted_minrank(p);
        CHECK(lo <= r.rank);
        CHECK(r.rank <= hi);
        CHECK(r.lower_bound <= r.rank);
        CHECK(r.rank <= r.upper_bound);
    }
}

TEST_CASE("size limit and budget") {
    // 8 nodes holding 7 blocks each: log2 size 56 > 30
    std::vector<std::string> has(8), needs(8);
    for (std::size_t i = 0; i < 8; ++i) {
        std::string h(8, '1'), r(8, '0');
        h[i] = '0';
        r[i] = '1';
        has[i] = h;
        needs[i] = r;
    }
    const EicProblem big{8, 8, BitMatrix::from_strings(has), BitMatrix::from_strings(needs)};
    CHECK_THROWS_AS(restricted_minrank(big), SizeLimitError);

    // the bounds coincide at 1 here, so the budget never has to kick in
    MinrankLimits budgeted;
    budgeted.node_budget = 10;
    const auto r = restricted_minrank(big, budgeted);
    CHECK(r.exact);
    CHECK(r.rank == 1);

    // directed 5-cycle: bounds leave a gap and one node of budget cannot
    // close it, so the result is the clique-cover fallback flagged inexact
    const EicProblem penta = from_side_info_digraph({{1}, {2}, {3}, {4}, {0}});
    CHECK(restricted_minrank(penta).rank == 4);
    MinrankLimits tiny;
    tiny.node_budget = 1;
    const auto q = restricted_minrank(penta, tiny);
    CHECK(!q.exact);
    CHECK(q.rank >= 4);
    CHECK(q.rank <= q.upper_bound);
}
