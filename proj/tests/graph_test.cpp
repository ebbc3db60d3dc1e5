#include <doctest.h>

#include <algorithm>

#include "common.hpp"
#include "eic/errors.hpp"
#include "eic/graph.hpp"

using namespace eic;
using namespace eic::testing;

namespace {

UndirectedView from_edges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> es) {
    UndirectedView h = make_undirected(n, UndirectedMode::AnyEdge);
    for (auto [a, b] : es) h.add_edge(a, b);
    return h;
}

}  // namespace

TEST_CASE("build_problem_graph swap2") {
    const ProblemGraph g = build_problem_graph(swap2());
    REQUIRE(g.size() == 2);
    CHECK(g.adj[0][1] == EdgeKind::Has);
    CHECK(g.adj[1][0] == EdgeKind::Has);
    CHECK(g.adj[0][0] == EdgeKind::None);
}

TEST_CASE("build_problem_graph cycle3") {
    // vertex i is (i, i); node i holds block i+1, the block vertex (i+1, i+1)
    // requests, so the has-edges run 0 -> 1 -> 2 -> 0
    const ProblemGraph g = build_problem_graph(cycle3());
    REQUIRE(g.size() == 3);
    CHECK(g.adj[0][1] == EdgeKind::Has);
    CHECK(g.adj[1][2] == EdgeKind::Has);
    CHECK(g.adj[2][0] == EdgeKind::Has);
    CHECK(g.adj[1][0] == EdgeKind::None);
    CHECK(g.adj[2][1] == EdgeKind::None);
    CHECK(g.adj[0][2] == EdgeKind::None);
}

TEST_CASE("build_problem_graph hub4 and same-block edges") {
    // canonical vertices: 0=(0,D2) 1=(1,D1) 2=(2,D3) 3=(3,D4)
    const ProblemGraph g = build_problem_graph(hub4());
    REQUIRE(g.size() == 4);
    CHECK(has_kind(g.adj[3][0], EdgeKind::Has));
    CHECK(has_kind(g.adj[3][1], EdgeKind::Has));
    CHECK(has_kind(g.adj[3][2], EdgeKind::Has));
    CHECK(has_kind(g.adj[0][3], EdgeKind::Has));
    CHECK(g.adj[1][2] == EdgeKind::None);

    // two requesters of one block produce a symmetric same-block pair
    EicProblem shared{3, 2, BitMatrix::from_strings({"01", "01", "10"}),
                      BitMatrix::from_strings({"10", "10", "01"})};
    const ProblemGraph gs = build_problem_graph(shared);
    CHECK(has_kind(gs.adj[0][1], EdgeKind::SameBlock));
    CHECK(has_kind(gs.adj[1][0], EdgeKind::SameBlock));
}

TEST_CASE("sender_neighborhood") {
    const EicProblem p = hub4();
    const ProblemGraph g = build_problem_graph(p);
    CHECK(sender_neighborhood(g, p, 3) == std::vector<std::size_t>{0, 1, 2});
    // node 0 holds blocks 0 and 3, requested at vertices 1 and 3
    CHECK(sender_neighborhood(g, p, 0) == std::vector<std::size_t>{1, 3});
    const EicProblem s2 = swap2();
    CHECK(sender_neighborhood(build_problem_graph(s2), s2, 0) == std::vector<std::size_t>{1});
}

TEST_CASE("undirected views") {
    const ProblemGraph s2 = build_problem_graph(swap2());
    CHECK(undirected_view(s2, UndirectedMode::MutualEdges).adjacent(0, 1));

    const ProblemGraph c3 = build_problem_graph(cycle3());
    const UndirectedView mutual = undirected_view(c3, UndirectedMode::MutualEdges);
    CHECK(!mutual.adjacent(0, 1));
    CHECK(!mutual.adjacent(1, 2));
    CHECK(!mutual.adjacent(2, 0));
    const UndirectedView any = undirected_view(c3, UndirectedMode::AnyEdge);
    CHECK(any.adjacent(0, 1));
    CHECK(any.adjacent(1, 2));
    CHECK(any.adjacent(2, 0));
}

TEST_CASE("maximal_cliques") {
    CHECK(maximal_cliques(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(maximal_cliques(from_edges(3, {{0, 1}, {1, 2}})) ==
          std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
    CHECK(maximal_cliques(from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}})) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4}});
    // isolated vertices appear as singletons
    CHECK(maximal_cliques(make_undirected(2, UndirectedMode::AnyEdge)) ==
          std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), ColorMode::Exact).colors ==
          3);
    CHECK(chromatic_number(make_undirected(4, UndirectedMode::AnyEdge), ColorMode::Exact)
              .colors == 1);
    // odd cycle needs 3 colors
    const auto c5 = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(chromatic_number(c5, ColorMode::Exact).colors == 3);
    CHECK(chromatic_number(c5, ColorMode::Greedy).colors >= 3);
    CHECK_THROWS_AS(
        chromatic_number(make_undirected(25, UndirectedMode::AnyEdge), ColorMode::Exact, 20),
        SizeLimitError);
}

TEST_CASE("clique_number") {
    CHECK(clique_number(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
    CHECK(clique_number(make_undirected(3, UndirectedMode::AnyEdge)) == 1);
    CHECK(clique_number(from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})) == 3);
}

TEST_CASE("separation condition") {
    const auto clique = check_separation_condition(build_problem_graph(clique3()));
    CHECK(clique.chi_any == 3);
    CHECK(clique.chi_bar_mutual == 1);
    CHECK(clique.gap);

    const auto cycle = check_separation_condition(build_problem_graph(cycle3()));
    CHECK(cycle.chi_any == 3);
    CHECK(cycle.chi_bar_mutual == 3);
    CHECK(!cycle.gap);

    // single-vertex problem graph: (chi - 1) = 0 < 1
    EicProblem single{2, 2, BitMatrix::from_strings({"01", "00"}),
                      BitMatrix::from_strings({"10", "00"})};
    // node 1 holds block 0 so the instance validates
    single.has = BitMatrix::from_strings({"00", "10"});
    CHECK(check_separation_condition(build_problem_graph(single)).gap);
}

TEST_CASE("dot export") {
    const std::string dot = to_dot(build_problem_graph(swap2()));
    CHECK(dot.find("label=\"0:0\"") != std::string::npos);
    CHECK(dot.find("v0 -> v1") != std::string::npos);
    const std::string dashed = to_dot(build_problem_graph(
        {3, 2, BitMatrix::from_strings({"01", "01", "10"}),
         BitMatrix::from_strings({"10", "10", "01"})}));
    CHECK(dashed.find("style=dashed") != std::string::npos);
}
