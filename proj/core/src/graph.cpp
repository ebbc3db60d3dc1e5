#include "eic/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "eic/errors.hpp"

namespace eic {

UndirectedView make_undirected(std::size_t n, UndirectedMode mode) {
    if (n > 64)
        throw SizeLimitError("undirected view limited to 64 vertices, got " + std::to_string(n));
    UndirectedView h;
    h.n = n;
    h.adj.assign(n, 0);
    h.mode = mode;
    return h;
}

ProblemGraph build_problem_graph(const EicProblem& p) {
    ProblemGraph g;
    g.vertices = requirement_pairs(p);
    const std::size_t k = g.vertices.size();
    g.adj.assign(k, std::vector<EdgeKind>(k, EdgeKind::None));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto& [u, a] = g.vertices[i];
            const auto& [w, b] = g.vertices[j];
            EdgeKind e = EdgeKind::None;
            if (p.has.get(u, b)) e = e | EdgeKind::Has;
            if (a == b) e = e | EdgeKind::SameBlock;
            g.adj[i][j] = e;
        }
    }
    return g;
}

std::vector<std::size_t> sender_neighborhood(const ProblemGraph& g, const EicProblem& p,
                                             std::size_t u) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (p.has.get(u, g.vertices[i].block)) out.push_back(i);
    return out;
}

UndirectedView undirected_view(const ProblemGraph& g, UndirectedMode mode) {
    UndirectedView h = make_undirected(g.size(), mode);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const bool fwd = g.has_edge(i, j), bwd = g.has_edge(j, i);
            const bool keep = mode == UndirectedMode::MutualEdges ? (fwd && bwd) : (fwd || bwd);
            if (keep) h.add_edge(i, j);
        }
    }
    return h;
}

UndirectedView complement(const UndirectedView& h) {
    UndirectedView c = make_undirected(h.n, h.mode);
    for (std::size_t i = 0; i < h.n; ++i)
        for (std::size_t j = i + 1; j < h.n; ++j)
            if (!h.adjacent(i, j)) c.add_edge(i, j);
    return c;
}

UndirectedView induced_subgraph(const UndirectedView& h, const std::vector<std::size_t>& verts) {
    UndirectedView s = make_undirected(verts.size(), h.mode);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (h.adjacent(verts[i], verts[j])) s.add_edge(i, j);
    return s;
}

namespace {

void bron_kerbosch(const UndirectedView& h, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P|X with most neighbours in P.
    std::uint64_t px = p | x;
    std::size_t pivot = 0;
    int best = -1;
    for (std::uint64_t s = px; s; s &= s - 1) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
        const int d = std::popcount(p & h.adj[v]);
        if (d > best) { best = d; pivot = v; }
    }
    std::uint64_t cand = p & ~h.adj[pivot];
    for (std::uint64_t s = cand; s; s &= s - 1) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
        const std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(h, r | bit, p & h.adj[v], x & h.adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<std::size_t> mask_to_vertices(std::uint64_t mask) {
    std::vector<std::size_t> v;
    for (std::uint64_t s = mask; s; s &= s - 1)
        v.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    return v;
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const UndirectedView& h) {
    std::vector<std::uint64_t> raw;
    if (h.n > 0) {
        const std::uint64_t all = h.n == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << h.n) - 1;
        bron_kerbosch(h, 0, all, 0, raw);
    }
    std::vector<std::vector<std::size_t>> out;
    out.reserve(raw.size());
    for (auto m : raw) out.push_back(mask_to_vertices(m));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

namespace {

struct ColorSearch {
    const UndirectedView& h;
    std::vector<std::size_t> order;     // vertices, most-constrained first
    std::vector<std::size_t> color;     // indexed by vertex
    std::vector<std::size_t> best_color;
    std::size_t best;

    void dfs(std::size_t idx, std::size_t used) {
        if (used >= best) return;
        if (idx == order.size()) {
            best = used;
            best_color = color;
            return;
        }
        const std::size_t v = order[idx];
        for (std::size_t c = 0; c < std::min(used + 1, best - 1); ++c) {
            bool ok = true;
            for (std::size_t w = 0; w < h.n && ok; ++w)
                if (h.adjacent(v, w) && color[w] != SIZE_MAX && color[w] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            dfs(idx + 1, std::max(used, c + 1));
            color[v] = SIZE_MAX;
        }
    }
};

ColoringResult greedy_coloring(const UndirectedView& h) {
    std::vector<std::size_t> order(h.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(h.adj[a]) > std::popcount(h.adj[b]);
    });
    std::vector<std::size_t> color(h.n, SIZE_MAX);
    std::size_t used = 0;
    for (std::size_t v : order) {
        std::uint64_t taken = 0;
        for (std::size_t w = 0; w < h.n; ++w)
            if (h.adjacent(v, w) && color[w] != SIZE_MAX) taken |= std::uint64_t{1} << color[w];
        std::size_t c = 0;
        while ((taken >> c) & 1u) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return {h.n == 0 ? 0 : used, std::move(color), false};
}

}  // namespace

std::size_t clique_number(const UndirectedView& h, std::size_t limit) {
    if (h.n > limit)
        throw SizeLimitError("exact clique number limited to " + std::to_string(limit) +
                             " vertices, got " + std::to_string(h.n));
    if (h.n == 0) return 0;
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(h)) best = std::max(best, c.size());
    return best;
}

ColoringResult chromatic_number(const UndirectedView& h, ColorMode mode,
                                std::size_t exact_limit) {
    if (h.n == 0) return {0, {}, true};
    if (mode == ColorMode::Greedy) return greedy_coloring(h);
    if (h.n > exact_limit)
        throw SizeLimitError("exact coloring limited to " + std::to_string(exact_limit) +
                             " vertices, got " + std::to_string(h.n));

    ColoringResult greedy = greedy_coloring(h);
    // A maximal clique seeds the lower bound and pre-colors the first vertices.
    auto cliques = maximal_cliques(h);
    const std::vector<std::size_t>& seed = cliques.front();

    ColorSearch s{h, {}, std::vector<std::size_t>(h.n, SIZE_MAX), {}, greedy.colors + 1};
    std::vector<char> in_seed(h.n, 0);
    for (std::size_t i = 0; i < seed.size(); ++i) {
        s.color[seed[i]] = i;
        in_seed[seed[i]] = 1;
    }
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < h.n; ++v)
        if (!in_seed[v]) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(h.adj[a]) > std::popcount(h.adj[b]);
    });
    s.order = rest;
    s.best_color = greedy.coloring;
    s.best = greedy.colors;
    // Only search if the clique bound leaves room for improvement.
    if (seed.size() < greedy.colors) s.dfs(0, seed.size());
    return {s.best, std::move(s.best_color), true};
}

SeparationCheck check_separation_condition(const ProblemGraph& g) {
    SeparationCheck out;
    out.vertices = g.size();
    out.chi_any = chromatic_number(undirected_view(g, UndirectedMode::AnyEdge),
                                   ColorMode::Exact).colors;
    out.chi_bar_mutual =
        chromatic_number(complement(undirected_view(g, UndirectedMode::MutualEdges)),
                         ColorMode::Exact).colors;
    out.gap = (out.chi_any - 1) * out.chi_bar_mutual < out.vertices;
    return out;
}

std::string to_dot(const ProblemGraph& g) {
    std::ostringstream os;
    os << "digraph eic {\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        os << "  v" << i << " [label=\"" << g.vertices[i].node << ":" << g.vertices[i].block
           << "\"];\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (has_kind(g.adj[i][j], EdgeKind::Has))
                os << "  v" << i << " -> v" << j << ";\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (has_kind(g.adj[i][j], EdgeKind::SameBlock))
                os << "  v" << i << " -> v" << j << " [style=dashed, dir=none];\n";
    os << "}\n";
    return os.str();
}

}  // namespace eic
