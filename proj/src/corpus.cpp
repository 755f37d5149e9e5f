#include "betti/corpus.hpp"

namespace betti {

MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusOptions& options)
{
    std::uniform_int_distribution<int> n_dist(options.min_variables, options.max_variables);
    std::uniform_int_distribution<int> count_dist(options.min_generators, options.max_generators);
    std::uniform_int_distribution<int> degree_dist(1, options.max_degree);

    const int n = n_dist(rng);
    const PolynomialContext ctx = PolynomialContext::standard(n);
    std::uniform_int_distribution<int> var_dist(0, n - 1);

    const int count = count_dist(rng);
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int g = 0; g < count; ++g) {
        Monomial m = Monomial::one(n);
        const int degree = degree_dist(rng);
        for (int k = 0; k < degree; ++k) m.exponents[static_cast<std::size_t>(var_dist(rng))] += 1;
        gens.push_back(std::move(m));
    }
    return minimalize(std::move(gens), ctx);
}

} // namespace betti
