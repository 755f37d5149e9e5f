#pragma once

#include "betti/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace betti {

// How a stored cell was decided: evaluated directly, zeroed by the
// consecutive-zero propagation rule, or excluded by the degree-window
// bounds.  Cells absent from storage and outside the window are
// bound-excluded zeros implicitly.
enum class Provenance { computed, pruned, bound_excluded };

struct BettiEntry {
    long long value = 0;
    Provenance prov = Provenance::computed;
};

// Graded Betti table of a monomial ideal (or of its quotient ring, after
// the row shift).  Sparse: absent cells are zero.  n_ambient is the
// variable count of the square-free model; c and d are the min/max
// generator degree of the subject ideal.  Storage covers the enumeration
// window row i: i + c <= j <= min(n_ambient, d * (i + 1)); everything
// outside is a bound-excluded zero.
struct BettiTable {
    FieldSpec field;
    int n_ambient = 0;
    std::string subject;
    long long c = 0;
    long long d = 0;
    // A complete table has every window cell decided; only complete tables
    // feed the invariant layer.
    bool complete = false;
    std::map<std::pair<int, int>, BettiEntry> cells;

    long long value(int i, int j) const;

    // Non-zero cells only.
    std::map<std::pair<int, int>, long long> value_map() const;

    long long window_jmin(int i) const { return i + c; }
    long long window_jmax(int i) const;
    bool in_window(int i, int j) const;

    // Stored, or provably zero because outside the window.
    bool is_decided(int i, int j) const;

    Provenance provenance(int i, int j) const;

    long long pruned_cells() const;
};

// First cell where the two tables' value maps differ, in lexicographic
// (i, j) order, together with both values; nullopt when equal.
struct TableDifference {
    int i = 0;
    int j = 0;
    long long lhs = 0;
    long long rhs = 0;
};
std::optional<TableDifference> first_difference(const BettiTable& lhs, const BettiTable& rhs);

inline bool value_maps_equal(const BettiTable& lhs, const BettiTable& rhs)
{
    return !first_difference(lhs, rhs).has_value();
}

// Derived homological invariants of a complete table.
struct InvariantSummary {
    long long c = 0;
    long long d = 0;
    std::map<int, long long> t; // row -> max j with a non-zero cell
    int projdim = 0;
    long long reg = 0;
    bool linear = false;
    std::optional<long long> index; // nullopt = infinity
    std::map<int, bool> ndp;        // p -> N_{c,p} for p = 1..projdim+1
};

} // namespace betti
