#pragma once

#include "betti/field.hpp"
#include "betti/matrix.hpp"
#include "betti/simplicial.hpp"

namespace betti {

// Boundary map of the reduced (augmented) chain complex: rows are the
// (k-1)-faces, columns the k-faces, both in lexicographic tuple order.  The
// entry at (F \ {v}, F) is (-1)^{position of v in the ascending enumeration
// of F}; k = 0 is the augmentation row of ones onto the single (-1)-face.
// Requires k >= 0; throws DomainError on the void complex.
Matrix boundary_matrix(const SimplicialComplex& complex, int k);

// dim of the k-th reduced homology over the field, via
// #k-faces - rank d_k - rank d_{k+1}.  Conventions: the void complex has
// dimension 0 in every degree; the irrelevant complex has dimension 1 in
// degree -1 and 0 elsewhere; k < -1 gives 0.
int reduced_homology_dim(const SimplicialComplex& complex, int k, FieldSpec field);

} // namespace betti
