#pragma once

#include "betti/betti_table.hpp"
#include "betti/monomial.hpp"

namespace betti {

struct HochsterOptions {
    // Propagation pruning: a window cell (i, j) with i >= 1 is declared
    // zero without evaluation when j - d >= (i - 1) + d and the d cells
    // beta_{i-1, j-d} .. beta_{i-1, j-1} are all known zero.
    bool prune = true;
    // Worker threads for the subset-homology sums of one row; rows remain a
    // sequential barrier, output is schedule-independent.
    int threads = 1;
};

// Full graded Betti table of a monomial ideal over the field, by summing
// reduced homology of induced subcomplexes of the Stanley-Reisner complex
// of the square-free (polarized) model:
//     beta_{i,j} = sum over |W| = j of dim H~_{j-i-2}(Delta_W).
// Enumeration covers exactly the degree window i + c <= j <=
// min(n', d(i+1)) for rows 0..n'-c; outside cells are bound-excluded
// zeros.  Throws DomainError on the zero or unit ideal, CapError when the
// square-free model needs more than 63 variables.
BettiTable hochster_betti(const MonomialIdeal& ideal, FieldSpec field, HochsterOptions options = {});

// Decision predicate of the propagation rule against a partially filled
// table: true iff i >= 1, j - d >= (i - 1) + d, and the predecessor cells
// beta_{i-1, j-d} .. beta_{i-1, j-1} are all decided zeros (computed,
// pruned, or bound-excluded).  Throws DomainError if a needed predecessor
// is undecided.
bool prune_admissible(const BettiTable& partial, int i, int j, long long d);

// Invariants of a complete table: t_i, projective dimension, regularity,
// linearity (reg = c = d), the largest p such that rows below p stay in
// degrees j <= i + c (infinity when no row violates), and the N_{c,p} map.
InvariantSummary invariants(const BettiTable& table, const MonomialIdeal& ideal);

// N_{d,p}: no non-zero cell with i < p and j - i > d.
bool ndp_property(const BettiTable& table, long long d, int p);

// Betti table of the quotient ring: rows shift by one and cell (0,0)
// becomes 1.
BettiTable betti_of_quotient(const BettiTable& table);

} // namespace betti
