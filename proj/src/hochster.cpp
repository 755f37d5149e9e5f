#include "betti/hochster.hpp"

#include "betti/errors.hpp"
#include "betti/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace betti {

namespace {

// Evaluates dim H~_k(Delta_W) for induced subcomplexes of the
// Stanley-Reisner complex given by the generator supports, without
// materializing facet lists: F is a face iff it contains no support.
// Boundary ranks are cached per (W, k); within one engine row each W is
// touched by exactly one worker, so entries need no per-entry locking,
// only the map itself is guarded.
class SubsetHomologyCache {
public:
    SubsetHomologyCache(std::vector<VertexSet> supports, FieldSpec field)
        : supports_(std::move(supports)), field_(field)
    {
    }

    int hom_dim(VertexSet w, int k)
    {
        if (k < -1) return 0;
        // A vertex of W that lies in no support inside W sits in every
        // facet of Delta_W, so the subcomplex is a cone: acyclic.
        if (has_cone_apex(w)) return 0;
        PerW& pw = slot(w);
        const std::vector<VertexSet> faces_k = faces_in(w, k);
        if (faces_k.empty()) return 0;
        const int r1 = boundary_rank(w, k, pw);
        const int r2 = boundary_rank(w, k + 1, pw);
        return static_cast<int>(faces_k.size()) - r1 - r2;
    }

private:
    struct PerW {
        std::map<int, int> rank_by_k;
    };

    bool is_face(VertexSet f) const
    {
        for (VertexSet s : supports_) {
            if (subset_of(s, f)) return false;
        }
        return true;
    }

    bool has_cone_apex(VertexSet w) const
    {
        VertexSet covered = 0;
        for (VertexSet s : supports_) {
            if (subset_of(s, w)) covered |= s;
        }
        return (w & ~covered) != 0;
    }

    std::vector<VertexSet> faces_in(VertexSet w, int k) const
    {
        std::vector<VertexSet> out;
        if (k < -1) return out;
        for_each_subset_of_size_mask(w, k + 1, [&](VertexSet f) {
            if (is_face(f)) out.push_back(f);
        });
        return out;
    }

    int boundary_rank(VertexSet w, int k, PerW& pw)
    {
        if (k <= -1) return 0;
        const auto it = pw.rank_by_k.find(k);
        if (it != pw.rank_by_k.end()) return it->second;

        const std::vector<VertexSet> cols = faces_in(w, k);
        int r = 0;
        if (!cols.empty()) {
            const std::vector<VertexSet> rows = faces_in(w, k - 1);
            std::unordered_map<VertexSet, int> row_index;
            row_index.reserve(rows.size() * 2);
            for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));
            Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                int pos = 0;
                for (int v : set_bits(cols[c])) {
                    m.at(row_index.at(cols[c] & ~vbit(v)), static_cast<int>(c)) = (pos % 2 == 0) ? 1 : -1;
                    ++pos;
                }
            }
            r = rank(m, field_);
        }
        pw.rank_by_k.emplace(k, r);
        return r;
    }

    PerW& slot(VertexSet w)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return map_[w];
    }

    std::vector<VertexSet> supports_;
    FieldSpec field_;
    std::unordered_map<VertexSet, PerW> map_;
    std::mutex mutex_;
};

long long cell_sum(SubsetHomologyCache& cache, int n, int i, int j, int threads)
{
    std::vector<VertexSet> subsets;
    for_each_subset_of_size_mask((n == 63) ? (~VertexSet{0} >> 1) : (vbit(n) - 1), j,
                                 [&](VertexSet w) { subsets.push_back(w); });
    const int k = j - i - 2;
    if (threads <= 1 || subsets.size() < 64) {
        long long total = 0;
        for (VertexSet w : subsets) total += cache.hom_dim(w, k);
        return total;
    }
    std::atomic<std::size_t> next{0};
    std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            long long local = 0;
            while (true) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= subsets.size()) break;
                local += cache.hom_dim(subsets[idx], k);
            }
            partial[static_cast<std::size_t>(t)] = local;
        });
    }
    for (auto& th : pool) th.join();
    long long total = 0;
    for (long long p : partial) total += p;
    return total;
}

} // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal, FieldSpec field, HochsterOptions options)
{
    if (ideal.is_zero()) throw DomainError("zero ideal has no Betti table");
    if (ideal.is_unit()) throw DomainError("unit ideal has no Betti table");

    const Polarization pol = polarize(ideal);
    const MonomialIdeal& model = pol.ideal;
    const int n = model.context.n();
    if (n > 63) throw CapError("square-free model needs " + std::to_string(n) + " variables; ground cap is 63");

    const auto [c, d] = degree_stats(model);
    std::vector<VertexSet> supports;
    supports.reserve(model.generators.size());
    for (const auto& g : model.generators) supports.push_back(g.support_mask());

    BettiTable table;
    table.field = field;
    table.n_ambient = n;
    table.subject = ideal.to_string();
    table.c = c;
    table.d = d;

    SubsetHomologyCache cache(std::move(supports), field);
    const int threads = std::max(1, options.threads);

    for (int i = 0; i + c <= n; ++i) {
        const int jmin = static_cast<int>(table.window_jmin(i));
        const int jmax = static_cast<int>(table.window_jmax(i));
        for (int j = jmin; j <= jmax; ++j) {
            if (options.prune && prune_admissible(table, i, j, d)) {
                table.cells[{i, j}] = BettiEntry{0, Provenance::pruned};
                continue;
            }
            const long long v = cell_sum(cache, n, i, j, threads);
            table.cells[{i, j}] = BettiEntry{v, Provenance::computed};
        }
    }
    table.complete = true;
    return table;
}

bool prune_admissible(const BettiTable& partial, int i, int j, long long d)
{
    if (i < 1) return false;
    if (j - d < (i - 1) + d) return false;
    for (long long jp = j - d; jp <= j - 1; ++jp) {
        const int jpi = static_cast<int>(jp);
        const auto it = partial.cells.find({i - 1, jpi});
        if (it != partial.cells.end()) {
            if (it->second.value != 0) return false;
            continue;
        }
        if (!partial.in_window(i - 1, jpi)) continue; // bound-excluded zero
        throw DomainError("prune_admissible: undecided predecessor entry");
    }
    return true;
}

InvariantSummary invariants(const BettiTable& table, const MonomialIdeal& ideal)
{
    if (!table.complete) throw DomainError("invariants: incomplete table");
    const auto [c, d] = degree_stats(ideal);

    InvariantSummary s;
    s.c = c;
    s.d = d;
    for (const auto& [key, v] : table.value_map()) {
        const auto [i, j] = key;
        (void)v;
        auto it = s.t.find(i);
        if (it == s.t.end() || it->second < j) s.t[i] = j;
    }
    // Row 0 always carries the generators, so t is non-empty.
    s.projdim = s.t.rbegin()->first;
    s.reg = 0;
    for (const auto& [i, ti] : s.t) s.reg = std::max(s.reg, ti - i);
    s.linear = (c == d) && (s.reg == d);

    s.index = std::nullopt;
    for (const auto& [i, ti] : s.t) {
        if (ti > i + c) {
            s.index = i;
            break;
        }
    }
    for (int p = 1; p <= s.projdim + 1; ++p) s.ndp[p] = ndp_property(table, c, p);
    return s;
}

bool ndp_property(const BettiTable& table, long long d, int p)
{
    for (const auto& [key, entry] : table.cells) {
        if (entry.value == 0) continue;
        const auto [i, j] = key;
        if (i < p && j - i > d) return false;
    }
    return true;
}

BettiTable betti_of_quotient(const BettiTable& table)
{
    BettiTable out;
    out.field = table.field;
    out.n_ambient = table.n_ambient;
    out.subject = "S/" + table.subject;
    out.c = 0;
    out.d = table.d;
    out.complete = table.complete;
    out.cells[{0, 0}] = BettiEntry{1, Provenance::computed};
    for (const auto& [key, entry] : table.cells) {
        out.cells[{key.first + 1, key.second}] = entry;
    }
    return out;
}

} // namespace betti
