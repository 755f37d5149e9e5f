#include "betti/betti_table.hpp"

#include <doctest.h>

using namespace betti;

namespace {

// n' = 4, c = d = 2: the window shape of the hollow-square ideal.
BettiTable sample_table()
{
    BettiTable t;
    t.field = FieldSpec::rationals();
    t.n_ambient = 4;
    t.c = 2;
    t.d = 2;
    t.cells[{0, 2}] = BettiEntry{2, Provenance::computed};
    t.cells[{1, 3}] = BettiEntry{0, Provenance::computed};
    t.cells[{1, 4}] = BettiEntry{1, Provenance::computed};
    t.cells[{2, 4}] = BettiEntry{0, Provenance::pruned};
    t.complete = true;
    return t;
}

} // namespace

TEST_SUITE("betti_table")
{
    TEST_CASE("window bounds")
    {
        const BettiTable t = sample_table();
        CHECK(t.window_jmin(0) == 2);
        CHECK(t.window_jmax(0) == 2); // min(4, 2)
        CHECK(t.window_jmin(1) == 3);
        CHECK(t.window_jmax(1) == 4); // min(4, 4)
        CHECK(t.in_window(0, 2));
        CHECK_FALSE(t.in_window(0, 3));
        CHECK_FALSE(t.in_window(1, 2));
        CHECK(t.in_window(2, 4));
        CHECK_FALSE(t.in_window(-1, 2));
    }

    TEST_CASE("values and the non-zero map")
    {
        const BettiTable t = sample_table();
        CHECK(t.value(0, 2) == 2);
        CHECK(t.value(1, 3) == 0);
        CHECK(t.value(1, 4) == 1);
        CHECK(t.value(0, 7) == 0); // absent
        const auto vm = t.value_map();
        CHECK(vm.size() == 2);
        CHECK(vm.at({0, 2}) == 2);
        CHECK(vm.at({1, 4}) == 1);
        CHECK(vm.count({1, 3}) == 0);
    }

    TEST_CASE("decidedness and provenance")
    {
        const BettiTable t = sample_table();
        CHECK(t.is_decided(0, 2));     // stored
        CHECK(t.is_decided(0, 3));     // outside window
        CHECK(t.is_decided(5, 100));   // far outside
        CHECK(t.provenance(0, 2) == Provenance::computed);
        CHECK(t.provenance(2, 4) == Provenance::pruned);
        CHECK(t.provenance(0, 3) == Provenance::bound_excluded);
        CHECK(t.pruned_cells() == 1);
    }

    TEST_CASE("first difference is the lexicographically first differing cell")
    {
        const BettiTable a = sample_table();
        BettiTable b = sample_table();
        CHECK_FALSE(first_difference(a, b).has_value());
        CHECK(value_maps_equal(a, b));

        b.cells[{1, 4}] = BettiEntry{7, Provenance::computed};
        b.cells[{0, 2}] = BettiEntry{0, Provenance::computed}; // now differs earliest
        const auto diff = first_difference(a, b);
        REQUIRE(diff.has_value());
        CHECK(diff->i == 0);
        CHECK(diff->j == 2);
        CHECK(diff->lhs == 2);
        CHECK(diff->rhs == 0);
        CHECK_FALSE(value_maps_equal(a, b));

        // A cell present only on one side counts as differing from zero.
        BettiTable c = sample_table();
        c.cells[{3, 6}] = BettiEntry{5, Provenance::computed};
        const auto diff2 = first_difference(a, c);
        REQUIRE(diff2.has_value());
        CHECK(diff2->i == 3);
        CHECK(diff2->j == 6);
        CHECK(diff2->lhs == 0);
        CHECK(diff2->rhs == 5);
    }
}
