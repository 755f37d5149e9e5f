#pragma once

#include <cstdint>

namespace betti {

// Coefficient field for homology and Betti numbers: the rationals
// (characteristic 0) or a prime field GF(p) with p < 2^31.
struct FieldSpec {
    long long characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec gf(long long p);

    bool is_rationals() const { return characteristic == 0; }

    bool operator==(const FieldSpec&) const = default;
};

// Validates 0 or a prime < 2^31; throws DomainError otherwise.
FieldSpec make_field(long long characteristic);

bool is_prime(long long p);

} // namespace betti
