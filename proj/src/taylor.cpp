#include "betti/taylor.hpp"

#include "betti/errors.hpp"
#include "betti/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace betti {

namespace {

using SubsetMask = std::uint32_t;

struct Strand {
    // Subsets with this exact lcm, bucketed by cardinality, each bucket in
    // ascending mask order.
    std::map<int, std::vector<SubsetMask>> by_rank;
};

// Rank of the strand differential from rank-k to rank-(k-1) basis subsets.
// Dropping generator g from F keeps the entry exactly when F \ {g} has the
// same lcm, i.e. lies in this strand's rank-(k-1) bucket.
int strand_boundary_rank(const Strand& strand, int k, FieldSpec field)
{
    const auto cit = strand.by_rank.find(k);
    if (cit == strand.by_rank.end() || cit->second.empty()) return 0;
    const auto rit = strand.by_rank.find(k - 1);
    if (rit == strand.by_rank.end() || rit->second.empty()) return 0;
    const auto& cols = cit->second;
    const auto& rows = rit->second;

    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int pos = 0;
        SubsetMask bits = cols[c];
        while (bits) {
            const SubsetMask low = bits & (~bits + 1);
            bits &= bits - 1;
            const SubsetMask sub = cols[c] & ~low;
            const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            if (it != rows.end() && *it == sub) {
                m.at(static_cast<int>(it - rows.begin()), static_cast<int>(c)) = (pos % 2 == 0) ? 1 : -1;
            }
            ++pos;
        }
    }
    return rank(m, field);
}

} // namespace

BettiTable taylor_betti(const MonomialIdeal& ideal, FieldSpec field)
{
    if (ideal.is_zero()) throw DomainError("zero ideal has no Betti table");
    const int r = static_cast<int>(ideal.generators.size());
    if (r > 20) throw CapError("Taylor oracle capped at 20 generators, got " + std::to_string(r));

    const auto [c, d] = degree_stats(ideal);
    BettiTable table;
    table.field = field;
    table.n_ambient = polarized_variable_count(ideal);
    table.subject = ideal.to_string();
    table.c = c;
    table.d = d;

    // Bucket the non-empty generator subsets by exact lcm multidegree.  The
    // empty set lives in degree 0 and never shares a strand with them, so
    // rank-1 subsets have no boundary target.
    std::map<std::vector<int>, Strand> strands;
    const SubsetMask all = (SubsetMask{1} << r) - 1;
    for (SubsetMask f = 1; f <= all && f != 0; ++f) {
        Monomial m = Monomial::one(ideal.context.n());
        for (int g = 0; g < r; ++g) {
            if (f & (SubsetMask{1} << g)) m = m.lcm(ideal.generators[static_cast<std::size_t>(g)]);
        }
        strands[std::move(m.exponents)].by_rank[std::popcount(f)].push_back(f);
    }

    for (const auto& [exps, strand] : strands) {
        long long j = 0;
        for (int e : exps) j += e;
        for (const auto& [k, basis] : strand.by_rank) {
            const int nk = static_cast<int>(basis.size());
            const int rk = strand_boundary_rank(strand, k, field);
            const int rk1 = strand_boundary_rank(strand, k + 1, field);
            const int h = nk - rk - rk1;
            if (h != 0) table.cells[{k - 1, static_cast<int>(j)}].value += h;
        }
    }
    table.complete = true;
    return table;
}

} // namespace betti
