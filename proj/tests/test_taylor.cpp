#include "betti/taylor.hpp"

#include "betti/corpus.hpp"
#include "betti/errors.hpp"
#include "betti/hochster.hpp"

#include <doctest.h>

#include <random>

using namespace betti;

namespace {

MonomialIdeal ideal_of(int n, std::initializer_list<const char*> gens)
{
    const PolynomialContext ctx = PolynomialContext::standard(n);
    std::vector<Monomial> ms;
    for (const char* g : gens) ms.push_back(parse_monomial(g, ctx));
    return minimalize(std::move(ms), ctx);
}

using ValueMap = std::map<std::pair<int, int>, long long>;

} // namespace

TEST_SUITE("taylor")
{
    TEST_CASE("resolves non-square-free input directly")
    {
        // (x^2, xy, y^3): the Taylor complex is already minimal enough to
        // read the answer off its lcm strands.
        const MonomialIdeal ideal = ideal_of(2, {"x1^2", "x1*x2", "x2^3"});
        const BettiTable t = taylor_betti(ideal, FieldSpec::rationals());
        CHECK(t.value_map() == ValueMap{{{0, 2}, 2}, {{0, 3}, 1}, {{1, 3}, 1}, {{1, 4}, 1}});
        CHECK(t.complete);
    }

    TEST_CASE("fixtures match the subset-homology engine")
    {
        const std::vector<MonomialIdeal> fixtures = {
            ideal_of(1, {"x1"}),
            ideal_of(2, {"x1", "x2"}),
            ideal_of(3, {"x1", "x2*x3"}),
            ideal_of(4, {"x1*x3", "x2*x4"}),
            ideal_of(5, {"x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"}),
            ideal_of(2, {"x1^2", "x1*x2", "x2^3"}),
            ideal_of(3, {"x1^3", "x2^2", "x1*x2*x3"}),
        };
        for (const auto& ideal : fixtures) {
            for (const long long p : {0LL, 2LL}) {
                const FieldSpec field = make_field(p);
                CHECK(value_maps_equal(taylor_betti(ideal, field), hochster_betti(ideal, field)));
            }
        }
    }

    TEST_CASE("polarization preserves the Betti table")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 15; ++trial) {
            const MonomialIdeal ideal = random_ideal(rng);
            const Polarization pol = polarize(ideal);
            CHECK(value_maps_equal(taylor_betti(ideal, FieldSpec::rationals()),
                                   taylor_betti(pol.ideal, FieldSpec::rationals())));
        }
    }

    TEST_CASE("works beyond the 63-variable ground cap of the other engine")
    {
        // One generator of degree 70 in one variable: polarization would
        // need 70 vertices, but the Taylor side is a single strand.
        const BettiTable t = taylor_betti(ideal_of(1, {"x1^70"}), FieldSpec::rationals());
        CHECK(t.value_map() == ValueMap{{{0, 70}, 1}});
    }

    TEST_CASE("gates")
    {
        CHECK_THROWS_AS(taylor_betti(MonomialIdeal{PolynomialContext::standard(2), {}},
                                     FieldSpec::rationals()),
                        DomainError);
        // 21 independent variables exceed the generator cap.
        const PolynomialContext ctx = PolynomialContext::standard(21);
        std::vector<Monomial> gens;
        for (int v = 0; v < 21; ++v) {
            Monomial m = Monomial::one(21);
            m.exponents[static_cast<std::size_t>(v)] = 1;
            gens.push_back(std::move(m));
        }
        CHECK_THROWS_AS(taylor_betti(minimalize(std::move(gens), ctx), FieldSpec::rationals()),
                        CapError);
        // 20 generators are still fine: 2^20 subsets, but strand-split.
        const PolynomialContext ctx20 = PolynomialContext::standard(20);
        std::vector<Monomial> gens20;
        for (int v = 0; v < 20; ++v) {
            Monomial m = Monomial::one(20);
            m.exponents[static_cast<std::size_t>(v)] = 1;
            gens20.push_back(std::move(m));
        }
        const BettiTable t = taylor_betti(minimalize(std::move(gens20), ctx20), FieldSpec::rationals());
        // Koszul complex of 20 variables: beta_{i, i+1} = C(20, i+1).
        CHECK(t.value(0, 1) == 20);
        CHECK(t.value(1, 2) == 190);
        CHECK(t.value(19, 20) == 1);
    }
}
