#include "betti/matrix.hpp"

#include "betti/errors.hpp"

#include <cstdlib>

namespace betti {

namespace {

long long powmod(long long a, long long e, long long m)
{
    long long r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

using int128 = __int128;

int128 checked_mul(int128 x, int128 y)
{
    int128 r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw ArithmeticError("integer overflow during fraction-free elimination");
    }
    return r;
}

int128 checked_sub(int128 x, int128 y)
{
    int128 r;
    if (__builtin_sub_overflow(x, y, &r)) {
        throw ArithmeticError("integer overflow during fraction-free elimination");
    }
    return r;
}

} // namespace

int rank_mod_p(const Matrix& m, long long p)
{
    const int rows = m.rows, cols = m.cols;
    std::vector<long long> a(m.a);
    for (auto& x : a) {
        x %= p;
        if (x < 0) x += p;
    }
    auto at = [&](int r, int c) -> long long& { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r) {
            if (at(r, c) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != rank) {
            for (int cc = c; cc < cols; ++cc) std::swap(at(pr, cc), at(rank, cc));
        }
        const long long inv = powmod(at(rank, c), p - 2, p);
        for (int r = rank + 1; r < rows; ++r) {
            if (at(r, c) == 0) continue;
            const long long f = at(r, c) * inv % p;
            at(r, c) = 0;
            for (int cc = c + 1; cc < cols; ++cc) {
                at(r, cc) = (at(r, cc) - f * at(rank, cc)) % p;
                if (at(r, cc) < 0) at(r, cc) += p;
            }
        }
        ++rank;
    }
    return rank;
}

int rank_fraction_free(const Matrix& m)
{
    const int rows = m.rows, cols = m.cols;
    std::vector<int128> a(m.a.begin(), m.a.end());
    auto at = [&](int r, int c) -> int128& { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; };
    int rank = 0;
    int128 prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r) {
            if (at(r, c) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != rank) {
            for (int cc = c; cc < cols; ++cc) std::swap(at(pr, cc), at(rank, cc));
        }
        const int128 piv = at(rank, c);
        for (int r = rank + 1; r < rows; ++r) {
            const int128 lead = at(r, c);
            for (int cc = c + 1; cc < cols; ++cc) {
                const int128 num = checked_sub(checked_mul(piv, at(r, cc)), checked_mul(lead, at(rank, cc)));
                const int128 q = num / prev;
                // Bareiss division is exact; a remainder would mean the
                // elimination state was corrupted.
                if (q * prev != num) {
                    throw ArithmeticError("inexact division in fraction-free elimination");
                }
                at(r, cc) = q;
            }
            at(r, c) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

int rank(const Matrix& m, FieldSpec field)
{
    if (m.rows == 0 || m.cols == 0) return 0;
    return field.is_rationals() ? rank_fraction_free(m) : rank_mod_p(m, field.characteristic);
}

Matrix multiply(const Matrix& lhs, const Matrix& rhs)
{
    if (lhs.cols != rhs.rows) throw DomainError("matrix shape mismatch in multiply");
    Matrix out(lhs.rows, rhs.cols);
    for (int r = 0; r < lhs.rows; ++r) {
        for (int k = 0; k < lhs.cols; ++k) {
            const long long v = lhs.at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < rhs.cols; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    }
    return out;
}

bool is_zero_matrix(const Matrix& m)
{
    for (long long v : m.a) {
        if (v != 0) return false;
    }
    return true;
}

} // namespace betti
