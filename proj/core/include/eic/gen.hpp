#pragma once

#include <cstdint>

#include "eic/problem.hpp"

namespace eic {

/// splitmix64 step; used for seeding and per-trial stream derivation.
std::uint64_t splitmix64(std::uint64_t& state);

/// xoshiro256** with splitmix64 seeding. Fixed, platform-independent output
/// so generated instances and golden digests are byte-identical everywhere.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::uint64_t s_[4];
};

struct GenConfig {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::size_t max_resamples = 10000;
};

/// Single-unicast instance from an Erdos-Renyi digraph: each of the n(n-1)
/// ordered pairs is an edge with probability p; the whole graph is resampled
/// until every node has out-degree >= 1. Edge i->j means node i holds block j.
EicProblem gen_erdos_renyi_single_unicast(const GenConfig& c);

/// General instance: each (u,a) gets needs=1 with p_need, each remaining cell
/// has=1 with p_has; resampled until valid with every node requesting >= 1
/// block. Exercises repeated blocks and non-trivial column repetition.
EicProblem gen_general(std::size_t n, std::size_t m, double p_has, double p_need,
                       std::uint64_t seed, std::size_t max_resamples = 10000);

}  // namespace eic
