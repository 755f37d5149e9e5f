#pragma once

#include "betti/betti_table.hpp"
#include "betti/monomial.hpp"
#include "betti/simplicial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace betti {

// Finite simple graph on vertices 1..n (n <= 63), undirected, no loops.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u - 1)] & vbit(v - 1)) != 0; }
    // Neighbourhood of v as a 0-based bitmask.
    VertexSet adj_mask(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }

    // Edges {u, v} with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;
    bool is_complete() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Deterministic enumeration of labelled graphs: bit t of `edge_bits` turns
// on the t-th pair in the lexicographic pair order (1,2), (1,3), ...,
// (1,n), (2,3), ...
Graph graph_from_edge_bits(int n, std::uint64_t edge_bits);

Graph complement(const Graph& graph);

// I(G) = (x_u * x_v : {u,v} edge) over the context (one variable per
// vertex).  The empty graph gives the zero ideal.
MonomialIdeal edge_ideal(const Graph& graph, const PolynomialContext& ctx);
MonomialIdeal edge_ideal(const Graph& graph);

// Clique complex: ground x1..xn, facets = maximal cliques (every vertex is
// a face).  Its minimal non-faces are exactly the non-edges.
SimplicialComplex clique_complex(const Graph& graph);

// Maximum-cardinality search followed by perfect-elimination verification.
bool is_chordal(const Graph& graph);

// All chordless cycles of length >= min_len, each reported once in
// canonical form (starting at its minimum vertex, the direction whose
// second vertex is smaller), sorted by (length, vertex sequence).
// Exponential in the worst case; intended for small n.
std::vector<std::vector<int>> induced_cycles(const Graph& graph, int min_len);

// min over chordless cycles of length > 3 of (length - 3); nullopt
// (infinity) when the graph is chordal.  Throws DomainError on a complete
// graph (the complement edge ideal would be zero).
std::optional<int> index_via_cycles(const Graph& graph);

struct FrobergReport {
    bool linear = false;  // edge ideal of the complement has linear resolution
    bool chordal = false; // the graph itself is chordal
    bool agree = false;
};

// Chordality of G against linearity of the resolution of I(complement(G)),
// decided by the Betti engine over the given field.  Throws DomainError on
// a complete graph.
FrobergReport froberg_check(const Graph& graph, FieldSpec field);

} // namespace betti
