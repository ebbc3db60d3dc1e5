#include <doctest.h>

#include "common.hpp"
#include "eic/errors.hpp"
#include "eic/solve.hpp"
#include "eic/verify.hpp"

using namespace eic;
using namespace eic::testing;

TEST_CASE("solve_centralized") {
    auto s = solve_centralized(swap2());
    CHECK(s.length() == 1);
    CHECK(s.beta == BitMatrix::from_strings({"11"}));
    CHECK(verify_centralized(swap2(), s).ok);

    s = solve_centralized(clique3());
    CHECK(s.length() == 1);
    CHECK(s.beta == BitMatrix::from_strings({"111"}));
    CHECK(verify_centralized(clique3(), s).ok);

    // vertex (3,3) is the only row carrying column 3, so the rank is 3
    s = solve_centralized(hub4());
    CHECK(s.length() == 3);
    CHECK(verify_centralized(hub4(), s).ok);

    s = solve_centralized(cycle3());
    CHECK(s.length() == 2);
    CHECK(verify_centralized(cycle3(), s).ok);
}

TEST_CASE("solve_decentralized_2x") {
    auto s = solve_decentralized_2x(swap2());
    CHECK(s.length() == 2);
    CHECK(s.beta[0] == BitMatrix::from_strings({"01"}));
    CHECK(s.beta[1] == BitMatrix::from_strings({"10"}));
    CHECK(verify_solution(swap2(), s).ok);

    s = solve_decentralized_2x(clique3());
    CHECK(s.length() == 2);
    CHECK(verify_solution(clique3(), s).ok);

    s = solve_decentralized_2x(cycle3());
    CHECK(s.length() <= 4);
    CHECK(verify_solution(cycle3(), s).ok);

    s = solve_decentralized_2x(hub4());
    CHECK(s.length() <= 6);
    CHECK(verify_solution(hub4(), s).ok);
}

TEST_CASE("greedy_min_cover") {
    CHECK(greedy_min_cover({1, 2, 3}, {{1, 2}, {2, 3}, {3}}) ==
          std::vector<std::size_t>{0, 1});
    CHECK(greedy_min_cover({1}, {{1}}) == std::vector<std::size_t>{0});
    CHECK(greedy_min_cover({1, 2, 3, 4, 5, 6}, {{1, 2, 3}, {4, 5}, {5, 6}, {1, 4}}) ==
          std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(greedy_min_cover({1, 2}, {{1}}), ValidationError);
}

TEST_CASE("exact_min_cover") {
    // greedy picks {2,3,4} first and needs 3 sets; optimal is 2
    const std::vector<std::vector<std::size_t>> sets{{2, 3, 4}, {0, 1, 2}, {3, 4, 5}};
    CHECK(exact_min_cover({0, 1, 2, 3, 4, 5}, sets).size() == 2);
    CHECK_THROWS_AS(
        exact_min_cover({0}, std::vector<std::vector<std::size_t>>(21, {0}), 20),
        SizeLimitError);
}

TEST_CASE("solve_task_based hub4") {
    const EicProblem p = hub4();
    const TaskBasedSolution s = solve_task_based(p);
    CHECK(s.length() == 3);
    CHECK(s.exact);
    // sender y (node 3) owns the three vertices it can serve; sender u (node
    // 0) sends D4 uncoded for vertex 3
    CHECK(s.partition.sets[3] == std::vector<std::size_t>{0, 1, 2});
    CHECK(s.partition.sets[0] == std::vector<std::size_t>{3});
    CHECK(s.beta[3].rows() == 2);
    CHECK(s.beta[0].rows() == 1);
    // y's two rows span {D1^D2, D2^D3}
    const BitMatrix span = BitMatrix::from_strings({"1100", "0110"});
    CHECK(express_in_rowspan(s.beta[3], span.row(0)).has_value());
    CHECK(express_in_rowspan(s.beta[3], span.row(1)).has_value());
    CHECK(s.beta[0] == BitMatrix::from_strings({"0001"}));
    CHECK(verify_task_based(p, s).ok);
}

TEST_CASE("solve_task_based clique3 and cycle3") {
    auto s = solve_task_based(clique3());
    CHECK(s.length() == 2);
    CHECK(verify_task_based(clique3(), s).ok);

    s = solve_task_based(cycle3());
    CHECK(s.length() == 3);
    CHECK(verify_task_based(cycle3(), s).ok);
}

TEST_CASE("exact_task_based_optimal") {
    CHECK(exact_task_based_optimal(hub4()).first == 3);
    CHECK(exact_task_based_optimal(clique3()).first == 2);
    CHECK(exact_task_based_optimal(swap2()).first == 2);
    CHECK(exact_task_based_optimal(cycle3()).first == 3);

    const auto [len, part] = exact_task_based_optimal(hub4());
    CHECK(len == 3);
    std::size_t covered = 0;
    for (const auto& set : part.sets) covered += set.size();
    CHECK(covered == 4);
}

TEST_CASE("exact_decentralized_optimal") {
    CHECK(exact_decentralized_optimal(swap2()) == 2);
    CHECK(exact_decentralized_optimal(cycle3()) == 3);
    CHECK(exact_decentralized_optimal(clique3()) == 2);
}

TEST_CASE("length ordering on fixtures") {
    for (const EicProblem& p : {swap2(), clique3(), cycle3(), hub4()}) {
        const std::size_t c = restricted_minrank(p).rank;
        const std::size_t d = exact_decentralized_optimal(p);
        const std::size_t t = exact_task_based_optimal(p).first;
        CHECK(c <= d);
        CHECK(d <= t);
        CHECK(solve_decentralized_2x(p).length() <= 2 * c);
        CHECK(t <= solve_task_based(p).length());
    }
}

TEST_CASE("to_linear") {
    const EicProblem p = hub4();
    const LinearBroadcastSolution lin = to_linear(solve_task_based(p), p);
    CHECK(lin.length() == 3);
    CHECK(verify_solution(p, lin).ok);
}

TEST_CASE("solution serialization round trips") {
    const EicProblem p = hub4();

    const CentralizedSolution c = solve_centralized(p);
    auto parsed = parse_solution(serialize_solution(c), p);
    REQUIRE(parsed.type == SolutionType::Centralized);
    CHECK(parsed.centralized->beta == c.beta);
    CHECK(parsed.centralized->decoding == c.decoding);

    const LinearBroadcastSolution d = solve_decentralized_2x(p);
    parsed = parse_solution(serialize_solution(d), p);
    REQUIRE(parsed.type == SolutionType::Decentralized);
    CHECK(parsed.decentralized->beta == d.beta);
    CHECK(parsed.decentralized->decoding == d.decoding);

    const TaskBasedSolution t = solve_task_based(p);
    parsed = parse_solution(serialize_solution(t), p);
    REQUIRE(parsed.type == SolutionType::TaskBased);
    CHECK(parsed.task_based->beta == t.beta);
    CHECK(parsed.task_based->partition.sets == t.partition.sets);
    CHECK(parsed.task_based->responsible == t.responsible);

    CHECK_THROWS_AS(parse_solution("{}", p), ParseError);
    CHECK_THROWS_AS(parse_solution(R"({"type":"weird","beta":[]})", p), ParseError);
}
