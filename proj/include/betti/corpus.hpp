#pragma once

// Seeded random monomial ideals, used to cross-validate the two resolution
// engines against each other on a reproducible corpus.

#include "betti/monomial.hpp"

#include <cstdint>
#include <random>

namespace betti {

struct CorpusOptions {
    int min_variables = 2;
    int max_variables = 6;
    int min_generators = 1;
    int max_generators = 6;
    int max_degree = 3;
};

// Draws one nonzero monomial ideal. Each candidate generator picks a degree
// uniformly in [1, max_degree] and then a multiset of that many variables
// uniformly; the result is minimalized, so the generator count may come out
// below the drawn one.
MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusOptions& options = {});

} // namespace betti
