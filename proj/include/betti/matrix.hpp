#pragma once

#include "betti/field.hpp"

#include <vector>

namespace betti {

// Dense integer matrix.  Entries are exact machine integers; rank is taken
// over a chosen field (reduction mod p for GF(p), fraction-free elimination
// for the rationals).  No floating point anywhere.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a; // row-major, rows * cols entries

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

// Rank over GF(p) by Gaussian elimination on residues.
int rank_mod_p(const Matrix& m, long long p);

// Rank over the rationals by fraction-free (Bareiss) elimination on
// integers.  Intermediate entries are minors of the input; they are held in
// 128-bit integers and overflow raises ArithmeticError.
int rank_fraction_free(const Matrix& m);

// Field-dispatched rank.
int rank(const Matrix& m, FieldSpec field);

// Integer matrix product (exact, used by chain-complex composition tests).
Matrix multiply(const Matrix& lhs, const Matrix& rhs);

bool is_zero_matrix(const Matrix& m);

} // namespace betti
