#include "eic/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "eic/errors.hpp"
#include "eic/gen.hpp"
#include "eic/solve.hpp"

namespace eic {

std::size_t search_space_eic(const EicProblem& p) {
    require_valid(p);
    std::size_t s = 0;
    for (const auto& [u, a] : requirement_pairs(p)) s += p.has.row_popcount(u);
    return s;
}

std::size_t search_space_kim(const EicProblem& p) {
    require_valid(p);
    if (!is_single_unicast(p))
        throw ValidationError("the compared method assumes single-unicast instances");
    std::size_t s = 0;
    for (std::size_t k = 0; k < p.n; ++k)
        for (std::size_t k2 = 0; k2 < p.n; ++k2)
            for (std::size_t a = 0; a < p.m; ++a)
                if (p.needs.get(k, a) && (p.has.get(k2, a) || p.needs.get(k2, a))) ++s;
    return s;
}

std::pair<double, std::vector<std::size_t>> search_space_ltcmar(const EicProblem& p) {
    require_valid(p);
    if (!is_single_unicast(p))
        throw ValidationError("the compared method assumes single-unicast instances");

    // Weak sender: holdings a strict subset of another sender's, or equal to a
    // lower-indexed sender's. All its rows are redundant; others count none.
    std::vector<std::size_t> n_k(p.n), n_k_c(p.n, 0);
    for (std::size_t k = 0; k < p.n; ++k) n_k[k] = p.has.row_popcount(k);
    for (std::size_t k = 0; k < p.n; ++k) {
        for (std::size_t j = 0; j < p.n; ++j) {
            if (j == k) continue;
            bool subset = true;
            for (std::size_t b = 0; b < p.m && subset; ++b)
                if (p.has.get(k, b) && !p.has.get(j, b)) subset = false;
            if (!subset) continue;
            if (n_k[j] > n_k[k] || (n_k[j] == n_k[k] && j < k)) {
                n_k_c[k] = n_k[k];
                break;
            }
        }
    }
    double log2 = 0.0;
    for (std::size_t k = 0; k < p.n; ++k) {
        log2 += static_cast<double>(n_k[k] * n_k[k] + n_k[k]) / 2.0;
        log2 -= static_cast<double>(n_k_c[k] * n_k_c[k] + n_k_c[k]) / 2.0;
    }
    return {std::max(0.0, log2), n_k_c};
}

SearchSpaceSizes search_space_sizes(const EicProblem& p) {
    SearchSpaceSizes s;
    s.log2_eic = static_cast<double>(search_space_eic(p));
    s.log2_kim = static_cast<double>(search_space_kim(p));
    auto [ltc, nkc] = search_space_ltcmar(p);
    s.log2_ltcmar = ltc;
    s.n_k_c = std::move(nkc);
    s.n_k.resize(p.n);
    for (std::size_t k = 0; k < p.n; ++k) s.n_k[k] = p.has.row_popcount(k);
    return s;
}

std::uint64_t derive_trial_seed(std::uint64_t seed, std::size_t n, std::size_t p_index,
                                std::size_t trial) {
    std::uint64_t s = seed;
    for (std::uint64_t v : {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p_index),
                            static_cast<std::uint64_t>(trial)})
        s ^= v + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    return splitmix64(s);
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Cell {
    std::size_t n;
    double p;
    std::size_t p_index;
};

std::vector<Cell> cells(const ExperimentConfig& cfg) {
    auto ns = cfg.ns;
    auto ps = cfg.ps;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<Cell> out;
    for (std::size_t n : ns)
        for (std::size_t pi = 0; pi < ps.size(); ++pi) out.push_back({n, ps[pi], pi});
    return out;
}

std::string config_sidecar(const ExperimentConfig& cfg, const char* kind) {
    auto ns = cfg.ns;
    auto ps = cfg.ps;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    nlohmann::json j;
    j["experiment"] = kind;
    j["ns"] = ns;
    j["ps"] = ps;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    return j.dump();
}

// Runs one trial body per (cell, trial) slot across `jobs` threads. Results
// land in preassigned slots, so the output is independent of scheduling.
template <typename Body>
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg, const std::vector<Cell>& cs,
                                    Body body) {
    std::vector<TrialRecord> records(cs.size() * cfg.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1)) {
            const Cell& c = cs[i / cfg.trials];
            const std::size_t trial = i % cfg.trials;
            TrialRecord r;
            r.n = c.n;
            r.p = c.p;
            r.trial = trial;
            r.seed = derive_trial_seed(cfg.seed, c.n, c.p_index, trial);
            const auto t0 = std::chrono::steady_clock::now();
            try {
                body(r);
            } catch (const SizeLimitError& e) {
                r.failed = true;
                r.failure = e.what();
            } catch (const GenerationError& e) {
                r.failed = true;
                r.failure = e.what();
            }
            r.micros = std::chrono::duration<double, std::micro>(
                           std::chrono::steady_clock::now() - t0).count();
            records[i] = std::move(r);
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return records;
}

}  // namespace

ExperimentResult run_search_ratio_experiment(const ExperimentConfig& cfg) {
    const auto cs = cells(cfg);
    auto records = run_trials(cfg, cs, [](TrialRecord& r) {
        const EicProblem prob = gen_erdos_renyi_single_unicast({r.n, r.p, r.seed});
        const SearchSpaceSizes s = search_space_sizes(prob);
        r.log2_eic = s.log2_eic;
        r.log2_ltcmar = s.log2_ltcmar;
    });

    std::ostringstream csv;
    csv << "n,p,trials,mean_ratio,min_ratio,max_ratio,seed,failures\n";
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
        double sum = 0.0, lo = 0.0, hi = 0.0;
        std::size_t ok = 0, failures = 0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const TrialRecord& r = records[ci * cfg.trials + t];
            if (r.failed) { ++failures; continue; }
            const double ratio = r.log2_ltcmar / r.log2_eic;
            if (ok == 0) { lo = hi = ratio; }
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            sum += ratio;
            ++ok;
        }
        const double mean = ok ? sum / static_cast<double>(ok) : 0.0;
        csv << cs[ci].n << "," << fmt6(cs[ci].p) << "," << cfg.trials << "," << fmt6(mean)
            << "," << fmt6(lo) << "," << fmt6(hi) << "," << cfg.seed << "," << failures << "\n";
    }
    return {csv.str(), config_sidecar(cfg, "search-ratio"), std::move(records)};
}

ExperimentResult run_cost_ratio_experiment(const ExperimentConfig& cfg, MinrankLimits limits) {
    const auto cs = cells(cfg);
    auto records = run_trials(cfg, cs, [&](TrialRecord& r) {
        const EicProblem prob = gen_erdos_renyi_single_unicast({r.n, r.p, r.seed});
        const MinrankResult mr = restricted_minrank(prob, limits);
        r.c_exact = mr.rank;
        r.c_is_exact = mr.exact;
        const TaskBasedSolution task = solve_task_based(prob, {limits});
        r.t_alg2 = task.length();
        r.t_is_exact = task.exact;
        r.d_alg1 = solve_decentralized_2x(prob, limits).length();
    });

    std::ostringstream csv;
    csv << "n,p,trials,mean_ratio,max_ratio,seed,failures\n";
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
        double sum = 0.0, hi = 0.0;
        std::size_t ok = 0, failures = 0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const TrialRecord& r = records[ci * cfg.trials + t];
            if (r.failed) { ++failures; continue; }
            const double ratio =
                static_cast<double>(r.t_alg2) / static_cast<double>(r.c_exact);
            hi = std::max(hi, ratio);
            sum += ratio;
            ++ok;
        }
        const double mean = ok ? sum / static_cast<double>(ok) : 0.0;
        csv << cs[ci].n << "," << fmt6(cs[ci].p) << "," << cfg.trials << "," << fmt6(mean)
            << "," << fmt6(hi) << "," << cfg.seed << "," << failures << "\n";
    }
    return {csv.str(), config_sidecar(cfg, "cost-ratio"), std::move(records)};
}

}  // namespace eic
