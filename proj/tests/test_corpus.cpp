#include "betti/corpus.hpp"

#include <doctest.h>

using namespace betti;

TEST_SUITE("corpus")
{
    TEST_CASE("same seed reproduces the same ideals")
    {
        std::mt19937_64 a(123), b(123), c(124);
        std::vector<std::string> from_a, from_b, from_c;
        for (int k = 0; k < 10; ++k) {
            from_a.push_back(random_ideal(a).to_string());
            from_b.push_back(random_ideal(b).to_string());
            from_c.push_back(random_ideal(c).to_string());
        }
        CHECK(from_a == from_b);
        CHECK(from_a != from_c);
    }

    TEST_CASE("samples respect the declared bounds")
    {
        std::mt19937_64 rng(1);
        for (int k = 0; k < 200; ++k) {
            const MonomialIdeal ideal = random_ideal(rng);
            CHECK(ideal.context.n() >= 2);
            CHECK(ideal.context.n() <= 6);
            CHECK_FALSE(ideal.is_zero());
            CHECK(ideal.generators.size() <= 6);
            for (const auto& g : ideal.generators) {
                CHECK(g.degree() >= 1);
                CHECK(g.degree() <= 3);
            }
            // Minimality: no generator divides another.
            for (std::size_t i = 0; i < ideal.generators.size(); ++i)
                for (std::size_t j = 0; j < ideal.generators.size(); ++j)
                    if (i != j) CHECK_FALSE(ideal.generators[i].divides(ideal.generators[j]));
        }
    }

    TEST_CASE("custom options narrow the draw")
    {
        CorpusOptions opt;
        opt.min_variables = 3;
        opt.max_variables = 3;
        opt.min_generators = 2;
        opt.max_generators = 2;
        opt.max_degree = 1;
        std::mt19937_64 rng(9);
        for (int k = 0; k < 20; ++k) {
            const MonomialIdeal ideal = random_ideal(rng, opt);
            CHECK(ideal.context.n() == 3);
            CHECK(ideal.squarefree());
            for (const auto& g : ideal.generators) CHECK(g.degree() == 1);
        }
    }
}
