#pragma once

#include "betti/betti_table.hpp"
#include "betti/monomial.hpp"

namespace betti {

// Independent Betti-table oracle from the Taylor complex: basis elements
// are generator subsets F graded by lcm(F); over the field the differential
// keeps the +-1 entry from F to F \ {f} exactly when lcm(F \ {f}) = lcm(F)
// (sign by sorted position of f in F), so homology splits into one strand
// per exact lcm multidegree and beta_{i,j} collects dim H_{i+1} of the
// strands of degree j.  Works directly on non-square-free input.  Throws
// DomainError on the zero ideal, CapError above 20 generators.
BettiTable taylor_betti(const MonomialIdeal& ideal, FieldSpec field);

} // namespace betti
