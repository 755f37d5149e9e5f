#include "betti/field.hpp"

#include "betti/errors.hpp"

#include <string>

namespace betti {

namespace {

long long mulmod(long long a, long long b, long long m)
{
    return static_cast<long long>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % static_cast<unsigned __int128>(m));
}

long long powmod(long long a, long long e, long long m)
{
    long long r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(long long n, long long a)
{
    if (n % a == 0) return n == a;
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(long long p)
{
    if (p < 2) return false;
    for (long long q : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    // Deterministic for all n < 3.2e18 with these bases.
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (!miller_rabin(p, a)) return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(long long p)
{
    return make_field(p);
}

FieldSpec make_field(long long characteristic)
{
    if (characteristic == 0) return FieldSpec{0};
    if (characteristic < 2 || characteristic >= (1LL << 31) || !is_prime(characteristic)) {
        throw DomainError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(characteristic));
    }
    return FieldSpec{characteristic};
}

} // namespace betti
