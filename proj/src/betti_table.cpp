#include "betti/betti_table.hpp"

#include <algorithm>

namespace betti {

long long BettiTable::value(int i, int j) const
{
    const auto it = cells.find({i, j});
    return it == cells.end() ? 0 : it->second.value;
}

std::map<std::pair<int, int>, long long> BettiTable::value_map() const
{
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [key, entry] : cells) {
        if (entry.value != 0) out.emplace(key, entry.value);
    }
    return out;
}

long long BettiTable::window_jmax(int i) const
{
    return std::min<long long>(n_ambient, d * (static_cast<long long>(i) + 1));
}

bool BettiTable::in_window(int i, int j) const
{
    return i >= 0 && j >= window_jmin(i) && j <= window_jmax(i);
}

bool BettiTable::is_decided(int i, int j) const
{
    return cells.count({i, j}) != 0 || !in_window(i, j);
}

Provenance BettiTable::provenance(int i, int j) const
{
    const auto it = cells.find({i, j});
    if (it != cells.end()) return it->second.prov;
    return Provenance::bound_excluded;
}

long long BettiTable::pruned_cells() const
{
    long long count = 0;
    for (const auto& [key, entry] : cells) {
        (void)key;
        if (entry.prov == Provenance::pruned) ++count;
    }
    return count;
}

std::optional<TableDifference> first_difference(const BettiTable& lhs, const BettiTable& rhs)
{
    const auto a = lhs.value_map();
    const auto b = rhs.value_map();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            return TableDifference{ia->first.first, ia->first.second, ia->second, 0};
        }
        if (ia == a.end() || ib->first < ia->first) {
            return TableDifference{ib->first.first, ib->first.second, 0, ib->second};
        }
        if (ia->second != ib->second) {
            return TableDifference{ia->first.first, ia->first.second, ia->second, ib->second};
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

} // namespace betti
