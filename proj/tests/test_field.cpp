#include "betti/errors.hpp"
#include "betti/field.hpp"

#include <doctest.h>

using namespace betti;

TEST_SUITE("field")
{
    TEST_CASE("characteristic zero is the rationals")
    {
        const FieldSpec f = make_field(0);
        CHECK(f.is_rationals());
        CHECK(f == FieldSpec::rationals());
    }

    TEST_CASE("primes are accepted")
    {
        CHECK(make_field(2).characteristic == 2);
        CHECK(make_field(3).characteristic == 3);
        CHECK(make_field(97).characteristic == 97);
        CHECK(make_field(2147483629).characteristic == 2147483629); // largest prime < 2^31
    }

    TEST_CASE("non-primes and out-of-range values are rejected")
    {
        CHECK_THROWS_AS(make_field(1), DomainError);
        CHECK_THROWS_AS(make_field(4), DomainError);
        CHECK_THROWS_AS(make_field(91), DomainError); // 7 * 13
        CHECK_THROWS_AS(make_field(-2), DomainError);
        CHECK_THROWS_AS(make_field(1LL << 31), DomainError);
    }

    TEST_CASE("primality test spot checks")
    {
        CHECK(is_prime(2));
        CHECK(is_prime(3));
        CHECK(is_prime(2147483629));
        CHECK_FALSE(is_prime(0));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(561));        // Carmichael number
        CHECK_FALSE(is_prime(1093 * 1093)); // Wieferich prime square
    }
}
