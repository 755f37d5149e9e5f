#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace betti {

// Vertex subsets are fixed-width bitmasks over an ordered ground set of at
// most 63 vertices; bit v stands for the ground vertex at position v.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

inline int set_size(VertexSet s) { return std::popcount(s); }

// b subset of a
inline bool subset_of(VertexSet b, VertexSet a) { return (b & ~a) == 0; }

inline std::vector<int> set_bits(VertexSet s)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

// Position of v within the ascending enumeration of s; v must be in s.
inline int bit_position(VertexSet s, int v)
{
    return std::popcount(s & (vbit(v) - 1));
}

// Lexicographic order on subsets viewed as ascending vertex tuples,
// e.g. {1,2} < {1,2,3} < {1,3} < {2}.
inline bool tuple_lex_less(VertexSet a, VertexSet b)
{
    while (a && b) {
        const int la = std::countr_zero(a);
        const int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Calls fn(mask) for every k-subset of the ascending vertex list `verts`,
// in lexicographic tuple order.  k = 0 yields the empty mask once.
template <class F>
void for_each_subset_of_size(const std::vector<int>& verts, int k, F&& fn)
{
    const int m = static_cast<int>(verts.size());
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(VertexSet{0});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t;
    while (true) {
        VertexSet mask = 0;
        for (int t = 0; t < k; ++t) mask |= vbit(verts[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]);
        fn(mask);
        int t = k - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - k + t) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < k; ++s) idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
    }
}

template <class F>
void for_each_subset_of_size_mask(VertexSet domain, int k, F&& fn)
{
    for_each_subset_of_size(set_bits(domain), k, std::forward<F>(fn));
}

} // namespace betti
