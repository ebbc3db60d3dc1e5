#pragma once

#include <map>
#include <string>
#include <vector>

#include "eic/solve.hpp"

namespace eic {

enum class ViolationKind {
    SenderSupport,
    Undecodable,
    PartitionNotDisjoint,
    PartitionNotSubset,
    PartitionIncomplete,
    CrossSenderDecode,
};

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string location;  // "u:a" for a pair, "sender i" for a sender
    std::string detail;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::size_t measured_length = 0;

    void add(ViolationKind kind, std::string location, std::string detail) {
        ok = false;
        violations.push_back({kind, std::move(location), std::move(detail)});
    }

    std::string to_text() const;
    std::string to_json() const;
};

/// Checks sender support and, independently of any provided decoding plan,
/// that e_a lies in the rowspan of [beta^(1); ...; beta^(n); diag(B_u)] for
/// every requirement pair. Provided decoding vectors are additionally checked
/// to reproduce e_a exactly. Collects all violations instead of failing fast.
VerificationReport verify_solution(const EicProblem& p, const LinearBroadcastSolution& s);

/// Omniscient-sender variant: no sender-support constraint on beta; decoding
/// is over [beta; diag(B_u)].
VerificationReport verify_centralized(const EicProblem& p, const CentralizedSolution& s);

/// Checks the partition (subset of each sender neighborhood, disjoint,
/// complete) and that each pair decodes from its responsible sender's rows
/// alone. A pair that decodes from the full stack but not from its own sender
/// is reported as CrossSenderDecode rather than Undecodable.
VerificationReport verify_task_based(const EicProblem& p, const TaskBasedSolution& s);

/// Concrete payloads: m blocks of ell bits each.
struct DataBlocks {
    std::vector<BitVector> blocks;

    std::size_t ell() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

/// Validates shape: m blocks, equal lengths, ell >= 1.
DataBlocks make_data_blocks(std::vector<BitVector> blocks, std::size_t m);

/// Materializes broadcasts as beta * D over GF(2) and runs each pair's
/// decoding plan; refuses (ValidationError) if the solution does not verify.
std::map<RequirementPair, BitVector> simulate(const EicProblem& p,
                                              const LinearBroadcastSolution& s,
                                              const DataBlocks& d);
std::map<RequirementPair, BitVector> simulate(const EicProblem& p, const CentralizedSolution& s,
                                              const DataBlocks& d);
std::map<RequirementPair, BitVector> simulate(const EicProblem& p, const TaskBasedSolution& s,
                                              const DataBlocks& d);

}  // namespace eic
