#include "eic/verify.hpp"

#include <sstream>

#include <json.hpp>

#include "eic/errors.hpp"

namespace eic {

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::SenderSupport: return "SenderSupport";
        case ViolationKind::Undecodable: return "Undecodable";
        case ViolationKind::PartitionNotDisjoint: return "PartitionNotDisjoint";
        case ViolationKind::PartitionNotSubset: return "PartitionNotSubset";
        case ViolationKind::PartitionIncomplete: return "PartitionIncomplete";
        case ViolationKind::CrossSenderDecode: return "CrossSenderDecode";
    }
    return "?";
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << (ok ? "ok" : "FAIL") << " length=" << measured_length << "\n";
    for (const auto& v : violations)
        os << "  " << to_string(v.kind) << " at " << v.location << ": " << v.detail << "\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["ok"] = ok;
    j["measured_length"] = measured_length;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"kind", to_string(v.kind)},
                                   {"location", v.location},
                                   {"detail", v.detail}});
    return j.dump();
}

namespace {

std::string pair_loc(const RequirementPair& pr) {
    return std::to_string(pr.node) + ":" + std::to_string(pr.block);
}

BitVector unit(std::size_t len, std::size_t pos) {
    BitVector v(len);
    v.set(pos, true);
    return v;
}

void check_shapes(const EicProblem& p, const std::vector<BitMatrix>& beta) {
    if (beta.size() != p.n)
        throw ValidationError("expected " + std::to_string(p.n) + " sender matrices, got " +
                              std::to_string(beta.size()));
    for (std::size_t u = 0; u < beta.size(); ++u)
        if (beta[u].rows() > 0 && beta[u].cols() != p.m)
            throw ValidationError("sender " + std::to_string(u) + " matrix has " +
                                  std::to_string(beta[u].cols()) + " columns, expected " +
                                  std::to_string(p.m));
}

void check_sender_support(const EicProblem& p, const std::vector<BitMatrix>& beta,
                          VerificationReport& rep) {
    for (std::size_t u = 0; u < beta.size(); ++u) {
        for (std::size_t r = 0; r < beta[u].rows(); ++r) {
            for (std::size_t b = 0; b < p.m; ++b) {
                if (beta[u].get(r, b) && !p.has.get(u, b)) {
                    rep.add(ViolationKind::SenderSupport, "sender " + std::to_string(u),
                            "row " + std::to_string(r) + " uses block " + std::to_string(b) +
                                " which node " + std::to_string(u) + " lacks");
                    break;
                }
            }
        }
    }
}

// Decoding vectors index rows of [stack; diag(B_u)]; verifies alpha * rows
// equals e_a.
void check_decoding_plan(const EicProblem& p, const BitMatrix& stack,
                         const std::map<RequirementPair, BitVector>& decoding,
                         VerificationReport& rep) {
    for (const auto& [pr, alpha] : decoding) {
        const BitMatrix full = vstack({stack, diagonal(p.has.row(pr.node))});
        if (alpha.size() != full.rows()) {
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "decoding vector has length " + std::to_string(alpha.size()) +
                        ", expected " + std::to_string(full.rows()));
            continue;
        }
        if (row_combination(alpha, full) != unit(p.m, pr.block))
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "provided decoding vector does not reproduce the requested block");
    }
}

}  // namespace

VerificationReport verify_solution(const EicProblem& p, const LinearBroadcastSolution& s) {
    require_valid(p);
    check_shapes(p, s.beta);
    VerificationReport rep;
    rep.measured_length = s.length();

    check_sender_support(p, s.beta, rep);

    const BitMatrix stack = vstack(s.beta);
    for (const auto& pr : requirement_pairs(p)) {
        const BitMatrix full = vstack({stack, diagonal(p.has.row(pr.node))});
        if (!express_in_rowspan(full, unit(p.m, pr.block)))
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "requested block is not in the rowspan of broadcasts plus side information");
    }
    check_decoding_plan(p, stack, s.decoding, rep);
    return rep;
}

VerificationReport verify_centralized(const EicProblem& p, const CentralizedSolution& s) {
    require_valid(p);
    if (s.beta.rows() > 0 && s.beta.cols() != p.m)
        throw ValidationError("beta has " + std::to_string(s.beta.cols()) +
                              " columns, expected " + std::to_string(p.m));
    VerificationReport rep;
    rep.measured_length = s.length();
    for (const auto& pr : requirement_pairs(p)) {
        const BitMatrix full = vstack({s.beta, diagonal(p.has.row(pr.node))});
        if (!express_in_rowspan(full, unit(p.m, pr.block)))
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "requested block is not in the rowspan of broadcasts plus side information");
    }
    check_decoding_plan(p, s.beta, s.decoding, rep);
    return rep;
}

VerificationReport verify_task_based(const EicProblem& p, const TaskBasedSolution& s) {
    require_valid(p);
    check_shapes(p, s.beta);
    VerificationReport rep;
    rep.measured_length = s.length();

    const ProblemGraph g = build_problem_graph(p);
    const auto pairs = g.vertices;
    if (s.partition.sets.size() != p.n)
        throw ValidationError("partition must have one set per node");

    std::vector<std::size_t> owner(pairs.size(), SIZE_MAX);
    for (std::size_t i = 0; i < s.partition.sets.size(); ++i) {
        for (std::size_t v : s.partition.sets[i]) {
            if (v >= pairs.size())
                throw ValidationError("partition vertex index " + std::to_string(v) +
                                      " out of range");
            if (owner[v] != SIZE_MAX)
                rep.add(ViolationKind::PartitionNotDisjoint, pair_loc(pairs[v]),
                        "assigned to senders " + std::to_string(owner[v]) + " and " +
                            std::to_string(i));
            else
                owner[v] = i;
            if (!p.has.get(i, pairs[v].block))
                rep.add(ViolationKind::PartitionNotSubset, pair_loc(pairs[v]),
                        "sender " + std::to_string(i) + " lacks block " +
                            std::to_string(pairs[v].block));
        }
    }
    for (std::size_t v = 0; v < pairs.size(); ++v)
        if (owner[v] == SIZE_MAX)
            rep.add(ViolationKind::PartitionIncomplete, pair_loc(pairs[v]),
                    "no sender is responsible for this pair");

    check_sender_support(p, s.beta, rep);

    const BitMatrix stack = vstack(s.beta);
    for (std::size_t v = 0; v < pairs.size(); ++v) {
        if (owner[v] == SIZE_MAX) continue;
        const auto& pr = pairs[v];
        const BitMatrix own = vstack({s.beta[owner[v]], diagonal(p.has.row(pr.node))});
        if (express_in_rowspan(own, unit(p.m, pr.block))) continue;
        const BitMatrix full = vstack({stack, diagonal(p.has.row(pr.node))});
        if (express_in_rowspan(full, unit(p.m, pr.block)))
            rep.add(ViolationKind::CrossSenderDecode, pair_loc(pr),
                    "decodable from all senders together but not from sender " +
                        std::to_string(owner[v]) + " alone");
        else
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "requested block is not decodable even from all senders together");
    }

    // Provided decoding vectors index [beta^(i); diag(B_u)] for the owner i.
    for (const auto& [pr, alpha] : s.decoding) {
        auto it = s.responsible.find(pr);
        if (it == s.responsible.end()) {
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "decoding entry has no responsible sender");
            continue;
        }
        const BitMatrix full = vstack({s.beta[it->second], diagonal(p.has.row(pr.node))});
        if (alpha.size() != full.rows()) {
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "decoding vector has length " + std::to_string(alpha.size()) +
                        ", expected " + std::to_string(full.rows()));
            continue;
        }
        if (row_combination(alpha, full) != unit(p.m, pr.block))
            rep.add(ViolationKind::Undecodable, pair_loc(pr),
                    "provided decoding vector does not reproduce the requested block");
    }
    return rep;
}

DataBlocks make_data_blocks(std::vector<BitVector> blocks, std::size_t m) {
    if (blocks.size() != m)
        throw ValidationError("expected " + std::to_string(m) + " data blocks, got " +
                              std::to_string(blocks.size()));
    if (blocks.empty() || blocks.front().size() == 0)
        throw ValidationError("data blocks must have length at least 1");
    for (const auto& b : blocks)
        if (b.size() != blocks.front().size())
            throw ValidationError("data blocks must all have the same length");
    return DataBlocks{std::move(blocks)};
}

namespace {

// beta (h x m) times the m payload blocks: h broadcast payloads of ell bits.
std::vector<BitVector> broadcast_payloads(const BitMatrix& beta, const DataBlocks& d) {
    std::vector<BitVector> out(beta.rows(), BitVector(d.ell()));
    for (std::size_t r = 0; r < beta.rows(); ++r)
        for (std::size_t b = 0; b < beta.cols(); ++b)
            if (beta.get(r, b)) out[r] ^= d.blocks[b];
    return out;
}

BitVector run_decode(const BitVector& alpha, const std::vector<BitVector>& broadcasts,
                     const EicProblem& p, std::size_t u, const DataBlocks& d) {
    BitVector out(d.ell());
    for (std::size_t r = 0; r < broadcasts.size(); ++r)
        if (alpha.get(r)) out ^= broadcasts[r];
    for (std::size_t b = 0; b < p.m; ++b)
        if (alpha.get(broadcasts.size() + b) && p.has.get(u, b)) out ^= d.blocks[b];
    return out;
}

}  // namespace

std::map<RequirementPair, BitVector> simulate(const EicProblem& p,
                                              const LinearBroadcastSolution& s,
                                              const DataBlocks& d) {
    const VerificationReport rep = verify_solution(p, s);
    if (!rep.ok)
        throw ValidationError("refusing to simulate an invalid solution:\n" + rep.to_text());
    make_data_blocks(d.blocks, p.m);
    const auto broadcasts = broadcast_payloads(vstack(s.beta), d);
    std::map<RequirementPair, BitVector> out;
    for (const auto& [pr, alpha] : s.decoding)
        out.emplace(pr, run_decode(alpha, broadcasts, p, pr.node, d));
    return out;
}

std::map<RequirementPair, BitVector> simulate(const EicProblem& p, const CentralizedSolution& s,
                                              const DataBlocks& d) {
    const VerificationReport rep = verify_centralized(p, s);
    if (!rep.ok)
        throw ValidationError("refusing to simulate an invalid solution:\n" + rep.to_text());
    make_data_blocks(d.blocks, p.m);
    const auto broadcasts = broadcast_payloads(s.beta, d);
    std::map<RequirementPair, BitVector> out;
    for (const auto& [pr, alpha] : s.decoding)
        out.emplace(pr, run_decode(alpha, broadcasts, p, pr.node, d));
    return out;
}

std::map<RequirementPair, BitVector> simulate(const EicProblem& p, const TaskBasedSolution& s,
                                              const DataBlocks& d) {
    const VerificationReport rep = verify_task_based(p, s);
    if (!rep.ok)
        throw ValidationError("refusing to simulate an invalid solution:\n" + rep.to_text());
    make_data_blocks(d.blocks, p.m);
    std::map<RequirementPair, BitVector> out;
    for (const auto& [pr, alpha] : s.decoding) {
        const std::size_t i = s.responsible.at(pr);
        const auto broadcasts = broadcast_payloads(s.beta[i], d);
        out.emplace(pr, run_decode(alpha, broadcasts, p, pr.node, d));
    }
    return out;
}

}  // namespace eic
