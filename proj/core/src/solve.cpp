#include "eic/solve.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "eic/errors.hpp"

namespace eic {

namespace {

BitVector concat(const BitVector& a, const BitVector& b) {
    BitVector out(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.get(i)) out.set(i, true);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.get(i)) out.set(a.size() + i, true);
    return out;
}

BitVector unit(std::size_t len, std::size_t pos) {
    BitVector v(len);
    v.set(pos, true);
    return v;
}

BitVector hadamard(const BitVector& a, const BitVector& b) {
    BitVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.get(i) && b.get(i)) out.set(i, true);
    return out;
}

BitMatrix rows_to_matrix(const std::vector<BitVector>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

}  // namespace

EicProblem induced_subproblem(const EicProblem& p, const ProblemGraph& g,
                              const std::vector<std::size_t>& vertices) {
    BitVector block_mask(p.m);
    for (std::size_t v : vertices) block_mask.set(g.vertices[v].block, true);
    EicProblem sub{p.n, p.m, BitMatrix(p.n, p.m), BitMatrix(p.n, p.m)};
    for (std::size_t u = 0; u < p.n; ++u)
        for (std::size_t b = 0; b < p.m; ++b)
            if (p.has.get(u, b) && block_mask.get(b)) sub.has.set(u, b, true);
    for (std::size_t v : vertices)
        sub.needs.set(g.vertices[v].node, g.vertices[v].block, true);
    return sub;
}

CentralizedSolution solve_centralized(const EicProblem& p, MinrankLimits limits) {
    const MinrankResult mr = restricted_minrank(p, limits);
    const auto pairs = requirement_pairs(p);

    CentralizedSolution s;
    s.exact = mr.exact;
    std::vector<BitVector> beta_rows;
    for (std::size_t r : mr.basis_rows) beta_rows.push_back(mr.witness.row(r));
    s.beta = rows_to_matrix(beta_rows, p.m);

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [u, a] = pairs[i];
        const BitVector row = mr.witness.row(i);
        auto lambda = express_in_rowspan(s.beta, row);
        // Basis rows span the witness rowspace, so this always succeeds.
        const BitVector mu = hadamard(p.has.row(u), row);
        s.decoding.emplace(pairs[i], concat(*lambda, mu));
    }
    return s;
}

LinearBroadcastSolution solve_decentralized_2x(const EicProblem& p, MinrankLimits limits) {
    const MinrankResult mr = restricted_minrank(p, limits);
    const auto pairs = requirement_pairs(p);

    std::vector<std::vector<BitVector>> rows(p.n);
    std::set<std::size_t> uncoded_blocks;
    for (std::size_t r : mr.basis_rows) {
        const auto& [u, a] = pairs[r];
        BitVector coded = mr.witness.row(r) ^ unit(p.m, a);
        if (coded.any()) rows[u].push_back(std::move(coded));
        uncoded_blocks.insert(a);  // one shared uncoded broadcast per block
    }
    for (std::size_t a : uncoded_blocks) {
        std::size_t w = p.n;
        for (std::size_t cand = 0; cand < p.n; ++cand)
            if (p.has.get(cand, a)) { w = cand; break; }
        rows[w].push_back(unit(p.m, a));
    }

    LinearBroadcastSolution s;
    s.exact = mr.exact;
    for (std::size_t u = 0; u < p.n; ++u) s.beta.push_back(rows_to_matrix(rows[u], p.m));

    std::vector<BitMatrix> stack_parts = s.beta;
    for (const auto& [u, a] : pairs) {
        auto parts = stack_parts;
        parts.push_back(diagonal(p.has.row(u)));
        auto alpha = express_in_rowspan(vstack(parts), unit(p.m, a));
        s.decoding.emplace(RequirementPair{u, a}, *alpha);
    }
    return s;
}

std::vector<std::size_t> greedy_min_cover(const std::vector<std::size_t>& universe,
                                          const std::vector<std::vector<std::size_t>>& sets) {
    std::set<std::size_t> uncovered(universe.begin(), universe.end());
    for (std::size_t e : uncovered) {
        bool found = false;
        for (const auto& s : sets)
            if (std::find(s.begin(), s.end(), e) != s.end()) { found = true; break; }
        if (!found)
            throw ValidationError("element " + std::to_string(e) + " is in no candidate set");
    }
    std::vector<std::size_t> chosen;
    while (!uncovered.empty()) {
        std::size_t best = sets.size(), best_gain = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            std::size_t gain = 0;
            for (std::size_t e : sets[i])
                if (uncovered.count(e)) ++gain;
            if (gain > best_gain) { best_gain = gain; best = i; }
        }
        chosen.push_back(best);
        for (std::size_t e : sets[best]) uncovered.erase(e);
    }
    return chosen;
}

std::vector<std::size_t> exact_min_cover(const std::vector<std::size_t>& universe,
                                         const std::vector<std::vector<std::size_t>>& sets,
                                         std::size_t max_sets) {
    if (sets.size() > max_sets)
        throw SizeLimitError("exact min-cover limited to " + std::to_string(max_sets) +
                             " sets, got " + std::to_string(sets.size()));
    // Map elements to bit positions.
    std::vector<std::size_t> elems(universe);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.size() > 64) throw SizeLimitError("exact min-cover limited to 64 elements");
    auto pos = [&](std::size_t e) {
        return static_cast<std::size_t>(
            std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
    };
    std::vector<std::uint64_t> set_mask(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t e : sets[i])
            if (std::binary_search(elems.begin(), elems.end(), e))
                set_mask[i] |= std::uint64_t{1} << pos(e);
    const std::uint64_t full =
        elems.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << elems.size()) - 1;

    std::vector<std::size_t> best = greedy_min_cover(universe, sets);
    std::vector<std::size_t> cur;
    auto dfs = [&](auto&& self, std::uint64_t covered) -> void {
        if (cur.size() + 1 >= best.size()) return;  // cannot improve
        if (covered == full) { best = cur; return; }
        const std::size_t e = static_cast<std::size_t>(std::countr_zero(~covered & full));
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!((set_mask[i] >> e) & 1u)) continue;
            cur.push_back(i);
            const std::uint64_t c2 = covered | set_mask[i];
            if (c2 == full && cur.size() < best.size()) best = cur;
            else self(self, c2);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return best;
}

TaskBasedSolution solve_task_based(const EicProblem& p, TaskSolveOptions opts) {
    require_valid(p);
    const ProblemGraph g = build_problem_graph(p);
    const auto pairs = g.vertices;
    const UndirectedView mutual = undirected_view(g, UndirectedMode::MutualEdges);

    // Candidate cliques: maximal cliques of each sender neighborhood's mutual
    // view, deduplicated, sorted (size desc, lex).
    std::set<std::vector<std::size_t>> clique_set;
    for (std::size_t i = 0; i < p.n; ++i) {
        const auto ni = sender_neighborhood(g, p, i);
        if (ni.empty()) continue;
        for (const auto& local : maximal_cliques(induced_subgraph(mutual, ni))) {
            std::vector<std::size_t> global;
            for (std::size_t v : local) global.push_back(ni[v]);
            std::sort(global.begin(), global.end());
            clique_set.insert(std::move(global));
        }
    }
    std::vector<std::vector<std::size_t>> cliques(clique_set.begin(), clique_set.end());
    std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });

    std::vector<std::size_t> universe(pairs.size());
    for (std::size_t v = 0; v < pairs.size(); ++v) universe[v] = v;
    const auto chosen = opts.exact_cover ? exact_min_cover(universe, cliques)
                                         : greedy_min_cover(universe, cliques);

    // Disjointness repair: lowest-index eligible sender per clique,
    // first-cover-wins per vertex.
    std::vector<std::vector<std::size_t>> tilde(p.n);
    std::vector<char> covered(pairs.size(), 0);
    for (std::size_t ci : chosen) {
        const auto& c = cliques[ci];
        std::size_t sender = p.n;
        for (std::size_t i = 0; i < p.n && sender == p.n; ++i) {
            bool subset = true;
            for (std::size_t v : c)
                if (!p.has.get(i, pairs[v].block)) { subset = false; break; }
            if (subset) sender = i;
        }
        for (std::size_t v : c) {
            if (!covered[v]) {
                covered[v] = 1;
                tilde[sender].push_back(v);
            }
        }
    }
    for (auto& t : tilde) std::sort(t.begin(), t.end());

    TaskBasedSolution s;
    s.partition.sets = tilde;
    s.beta.assign(p.n, BitMatrix(0, p.m));
    for (std::size_t i = 0; i < p.n; ++i) {
        if (tilde[i].empty()) continue;
        const EicProblem sub = induced_subproblem(p, g, tilde[i]);
        const MinrankResult mr = restricted_minrank(sub, opts.minrank);
        s.exact = s.exact && mr.exact;
        std::vector<BitVector> beta_rows;
        for (std::size_t r : mr.basis_rows) beta_rows.push_back(mr.witness.row(r));
        s.beta[i] = rows_to_matrix(beta_rows, p.m);

        const auto sub_pairs = requirement_pairs(sub);
        for (std::size_t row = 0; row < sub_pairs.size(); ++row) {
            const auto& [u, a] = sub_pairs[row];
            const BitVector wrow = mr.witness.row(row);
            auto lambda = express_in_rowspan(s.beta[i], wrow);
            const BitVector mu = hadamard(p.has.row(u), wrow);
            s.decoding.emplace(sub_pairs[row], concat(*lambda, mu));
            s.responsible.emplace(sub_pairs[row], i);
        }
    }
    return s;
}

std::pair<std::size_t, NeighborhoodPartition> exact_task_based_optimal(
    const EicProblem& p, TaskOracleLimits limits) {
    require_valid(p);
    const ProblemGraph g = build_problem_graph(p);
    const std::size_t k = g.size();
    if (k > limits.max_pairs)
        throw SizeLimitError("task oracle limited to " + std::to_string(limits.max_pairs) +
                             " requirement pairs, got " + std::to_string(k));

    std::vector<std::uint64_t> n_mask(p.n, 0);
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t v : sender_neighborhood(g, p, i))
            n_mask[i] |= std::uint64_t{1} << v;

    std::uint64_t assignments = 1;
    for (std::size_t v = 0; v < k; ++v) {
        std::uint64_t eligible = 0;
        for (std::size_t i = 0; i < p.n; ++i)
            if ((n_mask[i] >> v) & 1u) ++eligible;
        if (eligible == 0)
            throw ValidationError("vertex " + std::to_string(v) + " has no eligible sender");
        if (assignments > limits.max_assignments / eligible)
            throw SizeLimitError("assignment space exceeds the oracle limit");
        assignments *= eligible;
    }

    auto valid = [&](std::uint64_t t) {
        for (std::size_t i = 0; i < p.n; ++i)
            if ((t & ~n_mask[i]) == 0) return true;
        return false;
    };
    std::unordered_map<std::uint64_t, std::size_t> cost_cache;
    auto cost = [&](std::uint64_t t) {
        auto it = cost_cache.find(t);
        if (it != cost_cache.end()) return it->second;
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < k; ++v)
            if ((t >> v) & 1u) verts.push_back(v);
        const std::size_t c = restricted_minrank(induced_subproblem(p, g, verts)).rank;
        cost_cache.emplace(t, c);
        return c;
    };

    // Partition DP over vertex subsets; group cost is sender-independent, and
    // groups colliding on a sender can always be merged without extra cost.
    const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<std::size_t> f(full + 1, SIZE_MAX);
    std::vector<std::uint64_t> choice(full + 1, 0);
    f[0] = 0;
    for (std::uint64_t s = 1; s <= full; ++s) {
        const std::uint64_t low = s & (~s + 1);
        for (std::uint64_t t = s; t; t = (t - 1) & s) {
            if (!(t & low)) continue;
            if (!valid(t)) continue;
            if (f[s ^ t] == SIZE_MAX) continue;
            const std::size_t c = f[s ^ t] + cost(t);
            if (c < f[s]) { f[s] = c; choice[s] = t; }
        }
    }

    NeighborhoodPartition part;
    part.sets.assign(p.n, {});
    for (std::uint64_t s = full; s;) {
        const std::uint64_t t = choice[s];
        std::size_t sender = p.n;
        for (std::size_t i = 0; i < p.n && sender == p.n; ++i)
            if ((t & ~n_mask[i]) == 0) sender = i;
        for (std::size_t v = 0; v < k; ++v)
            if ((t >> v) & 1u) part.sets[sender].push_back(v);
        s ^= t;
    }
    for (auto& v : part.sets) std::sort(v.begin(), v.end());
    return {k == 0 ? 0 : f[full], part};
}

std::size_t exact_decentralized_optimal(const EicProblem& p,
                                        DecentralizedOracleLimits limits) {
    require_valid(p);
    if (p.m > 64) throw SizeLimitError("decentralized oracle limited to 64 blocks");
    std::size_t has_bits = 0;
    std::vector<std::uint64_t> has_mask(p.n, 0);
    for (std::size_t u = 0; u < p.n; ++u) {
        for (std::size_t b = 0; b < p.m; ++b)
            if (p.has.get(u, b)) has_mask[u] |= std::uint64_t{1} << b;
        has_bits += static_cast<std::size_t>(std::popcount(has_mask[u]));
    }
    if (has_bits > limits.max_has_bits)
        throw SizeLimitError("decentralized oracle limited to " +
                             std::to_string(limits.max_has_bits) + " held blocks, got " +
                             std::to_string(has_bits));

    const auto pairs = requirement_pairs(p);
    if (pairs.empty()) return 0;

    // Distinct nonzero vectors constructible by at least one sender.
    std::set<std::uint64_t> cand_set;
    for (std::size_t u = 0; u < p.n; ++u) {
        const std::uint64_t h = has_mask[u];
        for (std::uint64_t sub = h; sub; sub = (sub - 1) & h) cand_set.insert(sub);
    }
    const std::vector<std::uint64_t> cand(cand_set.begin(), cand_set.end());

    auto decodes = [&](const std::vector<std::uint64_t>& msgs) {
        for (std::size_t u = 0; u < p.n; ++u) {
            if (!p.needs.row_any(u)) continue;
            // Project messages onto the blocks u lacks and eliminate.
            std::uint64_t basis[64] = {0};
            for (std::uint64_t v : msgs) {
                v &= ~has_mask[u];
                while (v) {
                    const int h = 63 - std::countl_zero(v);
                    if (basis[h]) v ^= basis[h];
                    else { basis[h] = v; break; }
                }
            }
            for (std::size_t a = 0; a < p.m; ++a) {
                if (!p.needs.get(u, a)) continue;
                std::uint64_t v = std::uint64_t{1} << a;
                while (v) {
                    const int h = 63 - std::countl_zero(v);
                    if (basis[h]) v ^= basis[h];
                    else return false;
                }
            }
        }
        return true;
    };

    const std::size_t lower = std::max<std::size_t>(1, restricted_minrank(p).rank);
    std::vector<std::uint64_t> chosen;
    auto dfs = [&](auto&& self, std::size_t start, std::size_t remaining) -> bool {
        if (remaining == 0) return decodes(chosen);
        for (std::size_t i = start; cand.size() - i >= remaining; ++i) {
            chosen.push_back(cand[i]);
            if (self(self, i + 1, remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (std::size_t len = lower; len <= limits.max_length; ++len) {
        chosen.clear();
        if (dfs(dfs, 0, len)) return len;
    }
    throw SizeLimitError("no decentralized solution within the length limit of " +
                         std::to_string(limits.max_length));
}

LinearBroadcastSolution to_linear(const TaskBasedSolution& s, const EicProblem& p) {
    LinearBroadcastSolution out;
    out.beta = s.beta;
    out.exact = s.exact;
    const auto pairs = requirement_pairs(p);
    for (const auto& [u, a] : pairs) {
        auto parts = out.beta;
        parts.push_back(diagonal(p.has.row(u)));
        auto alpha = express_in_rowspan(vstack(parts), unit(p.m, a));
        out.decoding.emplace(RequirementPair{u, a}, *alpha);
    }
    return out;
}

// --- solution file format -------------------------------------------------

namespace {

nlohmann::json beta_to_json(const std::vector<BitMatrix>& beta) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : beta) arr.push_back(b.to_strings());
    return arr;
}

nlohmann::json decoding_to_json(const std::map<RequirementPair, BitVector>& d) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [pair, alpha] : d)
        obj[std::to_string(pair.node) + ":" + std::to_string(pair.block)] = alpha.to_string();
    return obj;
}

std::map<RequirementPair, BitVector> decoding_from_json(const nlohmann::json& j) {
    std::map<RequirementPair, BitVector> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = it.key();
        const auto colon = key.find(':');
        if (colon == std::string::npos) throw ParseError("decoding key must be \"u:a\"");
        try {
            RequirementPair pair{std::stoul(key.substr(0, colon)),
                                 std::stoul(key.substr(colon + 1))};
            out.emplace(pair, BitVector::from_string(it.value().get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad decoding entry for \"") + key + "\": " + e.what());
        }
    }
    return out;
}

std::vector<BitMatrix> beta_from_json(const nlohmann::json& j, std::size_t m) {
    if (!j.is_array()) throw ParseError("\"beta\" must be an array of sender matrices");
    std::vector<BitMatrix> out;
    for (const auto& sender : j) {
        std::vector<std::string> rows;
        for (const auto& r : sender) rows.push_back(r.get<std::string>());
        for (const auto& r : rows)
            if (r.size() != m)
                throw ParseError("beta row length " + std::to_string(r.size()) +
                                 " does not match m=" + std::to_string(m));
        BitMatrix mat = rows.empty() ? BitMatrix(0, m) : BitMatrix::from_strings(rows);
        out.push_back(std::move(mat));
    }
    return out;
}

}  // namespace

std::string serialize_solution(const CentralizedSolution& s) {
    nlohmann::json j;
    j["type"] = "centralized";
    j["beta"] = beta_to_json({s.beta});
    j["decoding"] = decoding_to_json(s.decoding);
    return j.dump();
}

std::string serialize_solution(const LinearBroadcastSolution& s) {
    nlohmann::json j;
    j["type"] = "decentralized";
    j["beta"] = beta_to_json(s.beta);
    j["decoding"] = decoding_to_json(s.decoding);
    return j.dump();
}

std::string serialize_solution(const TaskBasedSolution& s) {
    nlohmann::json j;
    j["type"] = "task-based";
    j["beta"] = beta_to_json(s.beta);
    j["partition"] = s.partition.sets;
    j["decoding"] = decoding_to_json(s.decoding);
    return j.dump();
}

SolutionFile parse_solution(const std::string& text, const EicProblem& p) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("type") || !j["type"].is_string())
        throw ParseError("missing \"type\" field");
    const std::string type = j["type"].get<std::string>();
    if (!j.contains("beta")) throw ParseError("missing \"beta\" field");
    auto beta = beta_from_json(j["beta"], p.m);
    auto decoding = j.contains("decoding") ? decoding_from_json(j["decoding"])
                                           : std::map<RequirementPair, BitVector>{};

    SolutionFile out;
    if (type == "centralized") {
        if (beta.size() != 1)
            throw ParseError("centralized solution must have exactly one beta matrix");
        out.type = SolutionType::Centralized;
        out.centralized = CentralizedSolution{std::move(beta.front()), std::move(decoding)};
    } else if (type == "decentralized") {
        if (beta.size() != p.n)
            throw ParseError("decentralized solution must have one beta matrix per node");
        out.type = SolutionType::Decentralized;
        out.decentralized = LinearBroadcastSolution{std::move(beta), std::move(decoding)};
    } else if (type == "task-based") {
        if (beta.size() != p.n)
            throw ParseError("task-based solution must have one beta matrix per node");
        if (!j.contains("partition")) throw ParseError("task-based solution needs a partition");
        TaskBasedSolution t;
        t.beta = std::move(beta);
        t.decoding = std::move(decoding);
        t.partition.sets = j["partition"].get<std::vector<std::vector<std::size_t>>>();
        if (t.partition.sets.size() != p.n)
            throw ParseError("partition must have one entry per node");
        const auto pairs = requirement_pairs(p);
        for (std::size_t i = 0; i < t.partition.sets.size(); ++i)
            for (std::size_t v : t.partition.sets[i]) {
                if (v >= pairs.size()) throw ParseError("partition vertex index out of range");
                t.responsible.emplace(pairs[v], i);
            }
        out.type = SolutionType::TaskBased;
        out.task_based = std::move(t);
    } else {
        throw ParseError("unknown solution type \"" + type + "\"");
    }
    return out;
}

}  // namespace eic
