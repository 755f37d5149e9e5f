#include "betti/graphs.hpp"

#include "betti/errors.hpp"
#include "betti/hochster.hpp"

#include <algorithm>

namespace betti {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 1) throw DomainError("graph needs at least one vertex");
    if (n > 63) throw CapError("graph larger than 63 vertices");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw DomainError("edge endpoint outside vertex range");
        if (u == v) throw DomainError("loops are not allowed");
        g.adj_[static_cast<std::size_t>(u - 1)] |= vbit(v - 1);
        g.adj_[static_cast<std::size_t>(v - 1)] |= vbit(u - 1);
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
        for (int v = u + 1; v <= n_; ++v) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

int Graph::edge_count() const
{
    int total = 0;
    for (VertexSet m : adj_) total += set_size(m);
    return total / 2;
}

bool Graph::is_complete() const
{
    return edge_count() == n_ * (n_ - 1) / 2;
}

Graph graph_from_edge_bits(int n, std::uint64_t edge_bits)
{
    std::vector<std::pair<int, int>> edges;
    int t = 0;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v, ++t) {
            if (edge_bits & (std::uint64_t{1} << t)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph complement(const Graph& graph)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= graph.n(); ++u) {
        for (int v = u + 1; v <= graph.n(); ++v) {
            if (!graph.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(graph.n(), edges);
}

MonomialIdeal edge_ideal(const Graph& graph, const PolynomialContext& ctx)
{
    if (ctx.n() != graph.n()) throw DomainError("edge_ideal: context arity differs from vertex count");
    std::vector<Monomial> gens;
    for (auto [u, v] : graph.edges()) {
        Monomial m = Monomial::one(ctx.n());
        m.exponents[static_cast<std::size_t>(u - 1)] = 1;
        m.exponents[static_cast<std::size_t>(v - 1)] = 1;
        gens.push_back(std::move(m));
    }
    return minimalize(std::move(gens), ctx);
}

MonomialIdeal edge_ideal(const Graph& graph)
{
    return edge_ideal(graph, PolynomialContext::standard(graph.n()));
}

SimplicialComplex clique_complex(const Graph& graph)
{
    const int n = graph.n();
    std::vector<VertexSet> cliques;
    // Bron-Kerbosch with pivoting.
    struct Rec {
        const Graph& g;
        std::vector<VertexSet>& out;
        void run(VertexSet r, VertexSet p, VertexSet x)
        {
            if (p == 0 && x == 0) {
                out.push_back(r);
                return;
            }
            int pivot = -1, best = -1;
            for (int v : set_bits(p | x)) {
                const int deg = set_size(p & g.adj_mask(v + 1));
                if (deg > best) {
                    best = deg;
                    pivot = v;
                }
            }
            for (int v : set_bits(p & ~g.adj_mask(pivot + 1))) {
                const VertexSet nv = g.adj_mask(v + 1);
                run(r | vbit(v), p & nv, x & nv);
                p &= ~vbit(v);
                x |= vbit(v);
            }
        }
    } rec{graph, cliques};
    const VertexSet full = (n == 63) ? (~VertexSet{0} >> 1) : (vbit(n) - 1);
    rec.run(0, full, 0);

    auto complex = SimplicialComplex::from_facets(PolynomialContext::standard(n).variable_names, std::move(cliques));
    // Construction self-check: every facet is a clique and no non-edge sits
    // inside a facet.  That pins the minimal non-faces to the non-edges and
    // hence the Stanley-Reisner ideal to the complement's edge ideal.
    for (VertexSet f : complex.facets()) {
        for (int v : set_bits(f)) {
            if (!subset_of(f & ~vbit(v), graph.adj_mask(v + 1))) {
                throw Error("clique_complex: facet is not a clique");
            }
        }
    }
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (graph.adjacent(u, v)) continue;
            const VertexSet pair = vbit(u - 1) | vbit(v - 1);
            if (complex.contains(pair)) throw Error("clique_complex: non-edge inside a facet");
        }
    }
    return complex;
}

bool is_chordal(const Graph& graph)
{
    const int n = graph.n();
    // Maximum-cardinality search: repeatedly number the vertex with most
    // numbered neighbours (ties to the smallest label).
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> pos(static_cast<std::size_t>(n), -1); // pick position per vertex
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (pos[static_cast<std::size_t>(v)] >= 0) continue;
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
        }
        pos[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
        for (int u : set_bits(graph.adj_mask(best + 1))) {
            if (pos[static_cast<std::size_t>(u)] < 0) ++weight[static_cast<std::size_t>(u)];
        }
    }
    // Perfect-elimination check against the reverse order: the earlier
    // neighbours of v minus the latest of them must all touch that latest
    // one.
    for (int v = 0; v < n; ++v) {
        VertexSet earlier = 0;
        int parent = -1, parent_pos = -1;
        for (int u : set_bits(graph.adj_mask(v + 1))) {
            if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)]) {
                earlier |= vbit(u);
                if (pos[static_cast<std::size_t>(u)] > parent_pos) {
                    parent_pos = pos[static_cast<std::size_t>(u)];
                    parent = u;
                }
            }
        }
        if (parent < 0) continue;
        if ((earlier & ~vbit(parent) & ~graph.adj_mask(parent + 1)) != 0) return false;
    }
    return true;
}

std::vector<std::vector<int>> induced_cycles(const Graph& graph, int min_len)
{
    std::vector<std::vector<int>> out;
    const int n = graph.n();
    std::vector<int> path;
    VertexSet path_mask = 0;

    // Grow induced paths from the cycle's minimum vertex s; a neighbour of
    // the tip adjacent to no other path vertex extends, one whose only
    // other path contact is s closes a chordless cycle.
    struct Rec {
        const Graph& g;
        int s;
        int min_len;
        std::vector<int>& path;
        VertexSet& mask;
        std::vector<std::vector<int>>& out;
        void extend()
        {
            const int tip = path.back();
            for (int w0 : set_bits(g.adj_mask(tip))) {
                const int w = w0 + 1;
                if (w <= s || (mask & vbit(w0))) continue;
                const VertexSet contacts = g.adj_mask(w) & mask & ~vbit(tip - 1);
                if (contacts == vbit(s - 1)) {
                    if (static_cast<int>(path.size()) + 1 >= min_len && path.size() >= 2 && path[1] < w) {
                        std::vector<int> cycle = path;
                        cycle.push_back(w);
                        out.push_back(std::move(cycle));
                    }
                    continue;
                }
                if (contacts == 0) {
                    path.push_back(w);
                    mask |= vbit(w0);
                    extend();
                    mask &= ~vbit(w0);
                    path.pop_back();
                }
            }
        }
    };

    for (int s = 1; s <= n; ++s) {
        for (int u0 : set_bits(graph.adj_mask(s))) {
            const int u = u0 + 1;
            if (u <= s) continue;
            path = {s, u};
            path_mask = vbit(s - 1) | vbit(u - 1);
            Rec rec{graph, s, std::max(min_len, 3), path, path_mask, out};
            rec.extend();
        }
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::optional<int> index_via_cycles(const Graph& graph)
{
    if (graph.is_complete()) throw DomainError("index_via_cycles: complete graph");
    const auto cycles = induced_cycles(graph, 4);
    if (cycles.empty()) return std::nullopt;
    std::size_t shortest = cycles.front().size();
    for (const auto& c : cycles) shortest = std::min(shortest, c.size());
    return static_cast<int>(shortest) - 3;
}

FrobergReport froberg_check(const Graph& graph, FieldSpec field)
{
    if (graph.is_complete()) throw DomainError("froberg_check: complete graph");
    const MonomialIdeal ideal = edge_ideal(complement(graph));
    const BettiTable table = hochster_betti(ideal, field);
    FrobergReport report;
    report.linear = invariants(table, ideal).linear;
    report.chordal = is_chordal(graph);
    report.agree = (report.linear == report.chordal);
    return report;
}

} // namespace betti
