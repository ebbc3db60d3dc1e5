#include <doctest.h>

#include <tuple>

#include "common.hpp"
#include "eic/errors.hpp"
#include "eic/experiments.hpp"
#include "eic/minrank.hpp"

using namespace eic;
using namespace eic::testing;

TEST_CASE("search_space_eic") {
    CHECK(search_space_eic(swap2()) == 2);
    CHECK(search_space_eic(clique3()) == 6);
    CHECK(search_space_eic(hub4()) == 7);
    for (const EicProblem& p : {swap2(), clique3(), cycle3(), hub4()})
        CHECK(search_space_eic(p) == fitting_space(p).log2_size());
}

TEST_CASE("search_space_kim") {
    CHECK(search_space_kim(swap2()) == 4);
    CHECK(search_space_kim(clique3()) == 9);
    CHECK(search_space_kim(cycle3()) == 6);
    CHECK(search_space_kim(hub4()) == 11);

    // block 0 requested twice: not single-unicast
    const EicProblem multi{3, 3, BitMatrix::from_strings({"001", "001", "110"}),
                           BitMatrix::from_strings({"100", "100", "001"})};
    CHECK_THROWS_AS(search_space_kim(multi), ValidationError);
}

TEST_CASE("search_space_ltcmar") {
    auto [v, nkc] = search_space_ltcmar(swap2());
    CHECK(v == 2.0);
    CHECK(nkc == std::vector<std::size_t>{0, 0});

    // three senders with two blocks each and incomparable holdings
    std::tie(v, nkc) = search_space_ltcmar(clique3());
    CHECK(v == 9.0);
    CHECK(nkc == std::vector<std::size_t>{0, 0, 0});

    // two senders with identical single-block holdings: the second is weak
    const EicProblem dup{3, 3, BitMatrix::from_strings({"001", "001", "110"}),
                         BitMatrix::from_strings({"100", "010", "001"})};
    std::tie(v, nkc) = search_space_ltcmar(dup);
    CHECK(nkc == std::vector<std::size_t>{0, 1, 0});
    CHECK(v == 4.0);

    // the two single-block holders sit strictly inside node 3's holdings
    std::tie(v, nkc) = search_space_ltcmar(hub4());
    CHECK(nkc == std::vector<std::size_t>{0, 1, 1, 0});
    CHECK(v == 9.0);

    const EicProblem multi{3, 3, BitMatrix::from_strings({"001", "001", "110"}),
                           BitMatrix::from_strings({"100", "100", "001"})};
    CHECK_THROWS_AS(search_space_ltcmar(multi), ValidationError);
}

TEST_CASE("derive_trial_seed decouples trials") {
    CHECK(derive_trial_seed(1, 5, 0, 0) == derive_trial_seed(1, 5, 0, 0));
    CHECK(derive_trial_seed(1, 5, 0, 0) != derive_trial_seed(1, 5, 0, 1));
    CHECK(derive_trial_seed(1, 5, 0, 0) != derive_trial_seed(1, 5, 1, 0));
    CHECK(derive_trial_seed(1, 5, 0, 0) != derive_trial_seed(2, 5, 0, 0));
}

TEST_CASE("cost ratio on forced structures") {
    // n=2 forces the swap: t=2, c=1, ratio exactly 2
    ExperimentConfig cfg{{2}, {1.0}, 3, 11, 1};
    const auto res = run_cost_ratio_experiment(cfg);
    CHECK(res.csv == "n,p,trials,mean_ratio,max_ratio,seed,failures\n"
                     "2,1.000000,3,2.000000,2.000000,11,0\n");
    for (const auto& r : res.records) {
        CHECK(r.c_exact == 1);
        CHECK(r.t_alg2 == 2);
        CHECK(r.d_alg1 <= 2 * r.c_exact);
    }

    // complete side information at n=3
    const auto res3 = run_cost_ratio_experiment({{3}, {1.0}, 2, 5, 1});
    for (const auto& r : res3.records) {
        CHECK(r.c_exact == 1);
        CHECK(r.t_alg2 == 2);
    }
}

TEST_CASE("experiments are deterministic across runs and jobs") {
    ExperimentConfig one{{4, 5}, {0.4, 0.7}, 5, 77, 1};
    ExperimentConfig four = one;
    four.jobs = 4;
    CHECK(run_search_ratio_experiment(one).csv == run_search_ratio_experiment(four).csv);
    CHECK(run_cost_ratio_experiment(one).csv == run_cost_ratio_experiment(four).csv);
    CHECK(run_search_ratio_experiment(one).csv == run_search_ratio_experiment(one).csv);
}

TEST_CASE("trial records satisfy the length laws") {
    const auto res = run_cost_ratio_experiment({{4, 5}, {0.3, 0.6}, 5, 3, 2});
    for (const auto& r : res.records) {
        REQUIRE(!r.failed);
        CHECK(r.c_is_exact);
        CHECK(r.d_alg1 <= 2 * r.c_exact);
        CHECK(r.c_exact <= r.t_alg2);
    }
}

TEST_CASE("sidecar echoes the config") {
    const auto res = run_search_ratio_experiment({{4}, {0.5}, 2, 9, 1});
    CHECK(res.config_json.find("\"experiment\":\"search-ratio\"") != std::string::npos);
    CHECK(res.config_json.find("\"seed\":9") != std::string::npos);
}
