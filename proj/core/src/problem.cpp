#include "eic/problem.hpp"

#include <json.hpp>

#include "eic/errors.hpp"

namespace eic {

std::vector<ValidationIssue> validate(const EicProblem& p) {
    std::vector<ValidationIssue> issues;
    if (p.has.rows() != p.n || p.has.cols() != p.m ||
        p.needs.rows() != p.n || p.needs.cols() != p.m) {
        issues.push_back({ValidationIssue::Kind::ShapeMismatch, 0, 0,
                          "has/needs matrices must both be n x m"});
        return issues;
    }
    for (std::size_t u = 0; u < p.n; ++u)
        for (std::size_t a = 0; a < p.m; ++a)
            if (p.has.get(u, a) && p.needs.get(u, a))
                issues.push_back({ValidationIssue::Kind::OverlapSupport, u, a,
                                  "node " + std::to_string(u) + " both has and needs block " +
                                      std::to_string(a)});
    for (std::size_t a = 0; a < p.m; ++a) {
        bool needed = false, held_by_other = false;
        for (std::size_t u = 0; u < p.n; ++u) {
            if (!p.needs.get(u, a)) continue;
            needed = true;
            for (std::size_t w = 0; w < p.n; ++w)
                if (w != u && p.has.get(w, a)) { held_by_other = true; break; }
            if (!held_by_other) break;
        }
        if (needed && !held_by_other)
            issues.push_back({ValidationIssue::Kind::UnsolvableBlock, 0, a,
                              "block " + std::to_string(a) +
                                  " is requested but no other node holds it"});
    }
    return issues;
}

bool is_valid(const EicProblem& p) { return validate(p).empty(); }

void require_valid(const EicProblem& p) {
    auto issues = validate(p);
    if (!issues.empty()) throw ValidationError(issues.front().detail);
}

std::vector<RequirementPair> requirement_pairs(const EicProblem& p) {
    std::vector<RequirementPair> out;
    for (std::size_t u = 0; u < p.n; ++u)
        for (std::size_t a = 0; a < p.m; ++a)
            if (p.needs.get(u, a)) out.push_back({u, a});
    return out;
}

bool is_single_unicast(const EicProblem& p) {
    for (std::size_t u = 0; u < p.n; ++u)
        if (p.needs.row_popcount(u) != 1) return false;
    for (std::size_t a = 0; a < p.m; ++a) {
        std::size_t requesters = 0;
        for (std::size_t u = 0; u < p.n; ++u)
            if (p.needs.get(u, a)) ++requesters;
        if (requesters > 1) return false;
    }
    return true;
}

EicProblem from_side_info_digraph(const std::vector<std::vector<std::size_t>>& out_edges) {
    const std::size_t k = out_edges.size();
    EicProblem p{k, k, BitMatrix(k, k), BitMatrix(k, k)};
    for (std::size_t i = 0; i < k; ++i) {
        if (out_edges[i].empty())
            throw ValidationError("vertex " + std::to_string(i) +
                                  " has out-degree 0; its request is unsolvable");
        p.needs.set(i, i, true);
        for (std::size_t j : out_edges[i]) {
            if (j >= k) throw ValidationError("edge target out of range");
            if (j != i) p.has.set(i, j, true);
        }
        if (!p.has.row_any(i))
            throw ValidationError("vertex " + std::to_string(i) +
                                  " has only a self-loop; its side information is empty");
    }
    return p;
}

std::string serialize(const EicProblem& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["has"] = p.has.to_strings();
    j["needs"] = p.needs.to_strings();
    return j.dump();
}

namespace {

BitMatrix parse_matrix(const nlohmann::json& j, const char* field,
                       std::size_t n, std::size_t m) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string("missing or non-array field \"") + field + "\"");
    const auto& arr = j[field];
    if (arr.size() != n)
        throw ParseError(std::string("field \"") + field + "\" must have n=" +
                         std::to_string(n) + " rows, got " + std::to_string(arr.size()));
    BitMatrix out(n, m);
    for (std::size_t u = 0; u < n; ++u) {
        if (!arr[u].is_string())
            throw ParseError(std::string("row ") + std::to_string(u) + " of \"" + field +
                             "\" is not a string");
        const std::string row = arr[u].get<std::string>();
        if (row.size() != m)
            throw ParseError(std::string("row ") + std::to_string(u) + " of \"" + field +
                             "\" has length " + std::to_string(row.size()) + ", expected m=" +
                             std::to_string(m));
        for (std::size_t a = 0; a < m; ++a) {
            if (row[a] == '1') out.set(u, a, true);
            else if (row[a] != '0')
                throw ParseError(std::string("row ") + std::to_string(u) + " of \"" + field +
                                 "\" contains a character outside {0,1}");
        }
    }
    return out;
}

}  // namespace

EicProblem parse_problem(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_unsigned())
        throw ParseError("missing or non-integer field \"n\"");
    if (!j.contains("m") || !j["m"].is_number_unsigned())
        throw ParseError("missing or non-integer field \"m\"");
    EicProblem p;
    p.n = j["n"].get<std::size_t>();
    p.m = j["m"].get<std::size_t>();
    p.has = parse_matrix(j, "has", p.n, p.m);
    p.needs = parse_matrix(j, "needs", p.n, p.m);
    require_valid(p);
    return p;
}

}  // namespace eic
