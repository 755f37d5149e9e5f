#pragma once

#include "betti/bitset_util.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betti {

// Ordered list of variable names of a polynomial ring.  Names are
// non-empty, unique, and free of the reserved characters '*', '^', '#',
// whitespace and '#'-comments aside, except that polarization introduces
// copies named "<name>#<k>".
struct PolynomialContext {
    std::vector<std::string> variable_names;

    int n() const { return static_cast<int>(variable_names.size()); }

    // x1..xn
    static PolynomialContext standard(int n);

    bool operator==(const PolynomialContext&) const = default;
};

// Exponent vector over a fixed context.
struct Monomial {
    std::vector<int> exponents;

    static Monomial one(int n) { return Monomial{std::vector<int>(static_cast<std::size_t>(n), 0)}; }

    int n() const { return static_cast<int>(exponents.size()); }
    long long degree() const;
    bool is_one() const;
    bool squarefree() const;
    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    // Bitmask of variables with positive exponent; requires n <= 63.
    VertexSet support_mask() const;

    std::string to_string(const PolynomialContext& ctx) const;

    bool operator==(const Monomial&) const = default;
};

// Canonical generator order: degree first, then lex with x1 > x2 > ...
bool monomial_order_less(const Monomial& a, const Monomial& b);

// Grammar: term ('*' term)*, term = name ('^' positive-int)?.  Whitespace
// around tokens is ignored.  Throws ParseError on unknown names, malformed
// syntax, or exponent overflow.
Monomial parse_monomial(std::string_view text, const PolynomialContext& ctx);

// Monomial ideal given by its unique minimal generating set in canonical
// order.  An empty generator list is the zero ideal; the whole ring appears
// as the single generator 1.
struct MonomialIdeal {
    PolynomialContext context;
    std::vector<Monomial> generators;

    bool is_zero() const { return generators.empty(); }
    bool is_unit() const;
    bool squarefree() const;

    // "(x1*x3, x2*x4)" with generators in canonical order; "(0)" when zero.
    std::string to_string() const;

    bool operator==(const MonomialIdeal&) const = default;
};

// Drops duplicates and any generator divisible by another; sorts
// canonically.  Idempotent.
MonomialIdeal minimalize(std::vector<Monomial> gens, const PolynomialContext& ctx);

// (c, d) = (min, max) generator degree.  Throws DomainError on the zero
// ideal.
std::pair<long long, long long> degree_stats(const MonomialIdeal& ideal);

// Result of polarization: the square-free ideal over its fresh context,
// plus the map from each context-2 variable back to the original variable
// index it copies.
struct Polarization {
    MonomialIdeal ideal;
    std::vector<int> var_origin;
};

// Standard polarization: x^a becomes the product of the first a_k copies of
// variable k; copies are named "<name>#<k>" and ordered by (original
// variable, copy index).  Only slots actually used get a variable.  Already
// square-free input returns the ideal unchanged with the identity map.
// Throws DomainError on the zero ideal.
Polarization polarize(const MonomialIdeal& ideal);

// Variable count of the square-free model (sum over variables of the
// maximal exponent), without building it.
int polarized_variable_count(const MonomialIdeal& ideal);

} // namespace betti
