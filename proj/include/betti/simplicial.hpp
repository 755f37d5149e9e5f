#pragma once

#include "betti/bitset_util.hpp"
#include "betti/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace betti {

// Finite abstract simplicial complex on an ordered ground set of labelled
// vertices (at most 63).  The vertex axiom is relaxed: a ground vertex need
// not be a face.  Stored by its facet antichain; an empty facet list is the
// void complex (no faces at all), the single facet {} is the irrelevant
// complex whose only face is the empty set.  Values are immutable after
// construction; the per-dimension face lists are memoized behind a mutex,
// so one instance can serve concurrent readers.
class SimplicialComplex {
public:
    SimplicialComplex() : memo_(std::make_shared<Memo>()) {}

    // Deduplicates, reduces to the antichain of maximal sets, sorts
    // canonically.  Throws CapError when the ground exceeds 63 vertices,
    // DomainError on a facet outside the ground range or duplicate labels.
    static SimplicialComplex from_facets(std::vector<std::string> ground, std::vector<VertexSet> facets);

    const std::vector<std::string>& ground() const { return ground_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    // -2 for the void complex, -1 for the irrelevant complex.
    int dim() const;

    // Face test: contained in some facet.
    bool contains(VertexSet f) const;

    // All k-faces in lexicographic tuple order; memoized per dimension.
    // k = -1 yields the empty face (unless void).  Requires k >= -1.
    const std::vector<VertexSet>& faces_of_dim(int k) const;

    bool operator==(const SimplicialComplex& other) const
    {
        return ground_ == other.ground_ && facets_ == other.facets_;
    }

private:
    struct Memo {
        std::mutex m;
        std::map<int, std::vector<VertexSet>> faces;
    };

    std::vector<std::string> ground_;
    std::vector<VertexSet> facets_;
    // Shared between copies; a copy carries the same immutable face data.
    mutable std::shared_ptr<Memo> memo_;
};

// Stanley-Reisner complex of a square-free ideal: ground = all context
// variables, faces = subsets whose monomial is not in the ideal, i.e.
// subsets containing no generator support.  Requires square-free input and
// I != (1); the zero ideal yields the full simplex.
SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal);

// Stanley-Reisner ideal of a complex: generators are the products over the
// inclusion-minimal non-faces.  Context variables are the ground labels.
// Throws DomainError on the void complex.
MonomialIdeal ideal_from_complex(const SimplicialComplex& complex);

// Inclusion-minimal non-faces in lexicographic tuple order.  Throws
// DomainError on the void complex, CapError when the ground is too large
// for exhaustive subset enumeration.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

// Induced subcomplex on W: faces of the complex contained in W, re-grounded
// on W's labels.  Void input stays void.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w);

// Faces contained in W, kept on the original ground (vertices outside W
// simply become non-faces).  Same homology as the induced subcomplex;
// useful for forming unions of restrictions inside one ambient complex.
SimplicialComplex restrict_within(const SimplicialComplex& complex, VertexSet w);

// Union of subcomplexes sharing one ambient ground set.  Throws
// DomainError on mismatched grounds or an empty part list.
SimplicialComplex union_of_subcomplexes(const std::vector<SimplicialComplex>& parts);

} // namespace betti
