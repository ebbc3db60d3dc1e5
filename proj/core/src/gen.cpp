#include "eic/gen.hpp"

#include <bit>
#include <string>

#include "eic/errors.hpp"

namespace eic {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

EicProblem gen_erdos_renyi_single_unicast(const GenConfig& c) {
    if (c.n < 2) throw GenerationError("need at least 2 nodes");
    if (c.p < 0.0 || c.p > 1.0) throw GenerationError("edge probability must be in [0, 1]");

    Xoshiro256 rng(c.seed);
    for (std::size_t attempt = 0; attempt < c.max_resamples; ++attempt) {
        // Row-major sampling order fixes the seed-to-instance mapping.
        std::vector<std::vector<std::size_t>> out_edges(c.n);
        std::vector<bool> held(c.n, false);
        bool ok = true;
        for (std::size_t u = 0; u < c.n; ++u) {
            for (std::size_t j = 0; j < c.n; ++j) {
                if (u == j) continue;
                if (rng.bernoulli(c.p)) {
                    out_edges[u].push_back(j);
                    held[j] = true;
                }
            }
            if (out_edges[u].empty()) ok = false;
        }
        // min in-degree >= 1 too: block u must be held somewhere to be servable
        for (std::size_t u = 0; u < c.n; ++u) ok = ok && held[u];
        if (ok) return from_side_info_digraph(out_edges);
    }
    throw GenerationError("no graph with min degrees 1 in " +
                          std::to_string(c.max_resamples) +
                          " resamples; increase p or n");
}

EicProblem gen_general(std::size_t n, std::size_t m, double p_has, double p_need,
                       std::uint64_t seed, std::size_t max_resamples) {
    if (n < 2 || m < 1) throw GenerationError("need at least 2 nodes and 1 block");
    if (p_has < 0.0 || p_has > 1.0 || p_need < 0.0 || p_need > 1.0)
        throw GenerationError("probabilities must be in [0, 1]");

    Xoshiro256 rng(seed);
    for (std::size_t attempt = 0; attempt < max_resamples; ++attempt) {
        EicProblem p{n, m, BitMatrix(n, m), BitMatrix(n, m)};
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t a = 0; a < m; ++a)
                if (rng.bernoulli(p_need)) p.needs.set(u, a, true);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t a = 0; a < m; ++a)
                if (!p.needs.get(u, a) && rng.bernoulli(p_has)) p.has.set(u, a, true);

        bool every_node_requests = true;
        for (std::size_t u = 0; u < n; ++u)
            if (!p.needs.row_any(u)) every_node_requests = false;
        if (every_node_requests && is_valid(p)) return p;
    }
    throw GenerationError("no valid instance in " + std::to_string(max_resamples) +
                          " resamples; adjust p_has/p_need");
}

}  // namespace eic
