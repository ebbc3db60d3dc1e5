#include <doctest.h>

#include "common.hpp"
#include "eic/errors.hpp"
#include "eic/gen.hpp"

using namespace eic;
using namespace eic::testing;

TEST_CASE("p=1 gives the complete instance") {
    CHECK(gen_erdos_renyi_single_unicast({3, 1.0, 7}) == clique3());
    CHECK(gen_erdos_renyi_single_unicast({2, 1.0, 99}) == swap2());
}

TEST_CASE("determinism") {
    const auto a = gen_erdos_renyi_single_unicast({6, 0.4, 1234});
    const auto b = gen_erdos_renyi_single_unicast({6, 0.4, 1234});
    CHECK(a == b);
    const auto c = gen_erdos_renyi_single_unicast({6, 0.4, 1235});
    CHECK(a != c);

    CHECK(gen_general(4, 5, 0.5, 0.3, 7) == gen_general(4, 5, 0.5, 0.3, 7));
}

TEST_CASE("golden instances") {
    // pinned once from the fixed generator; guards cross-platform stability
    CHECK(serialize(gen_erdos_renyi_single_unicast({5, 0.5, 42})) ==
          R"({"has":["00010","10110","11001","00001","11100"],"m":5,"n":5,"needs":["10000","01000","00100","00010","00001"]})");
    CHECK(serialize(gen_general(4, 5, 0.5, 0.3, 7)) ==
          R"({"has":["00110","10000","01001","00010"],"m":5,"n":4,"needs":["11001","00011","00100","00100"]})");
}

TEST_CASE("generated problems validate") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto p = gen_erdos_renyi_single_unicast({5, 0.4, seed});
        CHECK(validate(p).empty());
        CHECK(is_single_unicast(p));
        const auto g = gen_general(4, 5, 0.6, 0.3, seed);
        CHECK(validate(g).empty());
        bool all_request = true;
        for (std::size_t u = 0; u < g.n; ++u)
            all_request = all_request && g.needs.row_any(u);
        CHECK(all_request);
    }
}

TEST_CASE("resample limit") {
    CHECK_THROWS_AS(gen_erdos_renyi_single_unicast({2, 0.0, 1}), GenerationError);
    CHECK_THROWS_AS(gen_erdos_renyi_single_unicast({2, 0.0, 1, 10}), GenerationError);
    CHECK_THROWS_AS(gen_general(2, 2, 0.0, 0.0, 1, 10), GenerationError);
}

TEST_CASE("prng sanity") {
    Xoshiro256 rng(2024);
    std::size_t ones = 0;
    const std::size_t samples = 10000;
    for (std::size_t i = 0; i < samples; ++i)
        if (rng.bernoulli(0.5)) ++ones;
    const double freq = static_cast<double>(ones) / samples;
    CHECK(freq >= 0.48);
    CHECK(freq <= 0.52);
}
