#include "betti/simplicial.hpp"

#include "betti/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace betti {

namespace {

constexpr int kMaxEnumerationGround = 22;

// Keep only maximal sets, dedupe, sort by tuple-lex order.
std::vector<VertexSet> antichain_of_maximal(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i != j && subset_of(sets[i], sets[j]) && sets[i] != sets[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(sets[i]);
    }
    std::sort(out.begin(), out.end(), tuple_lex_less);
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> ground, std::vector<VertexSet> facets)
{
    if (ground.size() > 63) throw CapError("ground set larger than 63 vertices");
    {
        std::set<std::string> seen(ground.begin(), ground.end());
        if (seen.size() != ground.size()) throw DomainError("duplicate ground labels");
    }
    const VertexSet full = ground.empty() ? 0 : ((ground.size() == 63) ? ~VertexSet{0} >> 1 : (vbit(static_cast<int>(ground.size())) - 1));
    for (VertexSet f : facets) {
        if (!subset_of(f, full)) throw DomainError("facet outside ground range");
    }
    SimplicialComplex out;
    out.ground_ = std::move(ground);
    out.facets_ = antichain_of_maximal(std::move(facets));
    return out;
}

int SimplicialComplex::dim() const
{
    if (is_void()) return -2;
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, set_size(f) - 1);
    return d;
}

bool SimplicialComplex::contains(VertexSet f) const
{
    for (VertexSet facet : facets_) {
        if (subset_of(f, facet)) return true;
    }
    return false;
}

const std::vector<VertexSet>& SimplicialComplex::faces_of_dim(int k) const
{
    if (k < -1) throw DomainError("faces_of_dim: dimension below -1");
    std::lock_guard<std::mutex> lock(memo_->m);
    auto it = memo_->faces.find(k);
    if (it != memo_->faces.end()) return it->second;

    std::vector<VertexSet> list;
    if (!is_void()) {
        std::vector<int> verts(static_cast<std::size_t>(ground_size()));
        for (int v = 0; v < ground_size(); ++v) verts[static_cast<std::size_t>(v)] = v;
        for_each_subset_of_size(verts, k + 1, [&](VertexSet f) {
            if (contains(f)) list.push_back(f);
        });
    }
    return memo_->faces.emplace(k, std::move(list)).first->second;
}

SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal)
{
    if (!ideal.squarefree()) throw DomainError("complex_from_squarefree_ideal: ideal is not square-free");
    if (ideal.is_unit()) throw DomainError("complex_from_squarefree_ideal: unit ideal has no complex");
    const int n = ideal.context.n();
    if (n > 63) throw CapError("ground set larger than 63 vertices");
    const VertexSet full = (n == 63) ? (~VertexSet{0} >> 1) : (vbit(n) - 1);

    std::vector<VertexSet> supports;
    supports.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) supports.push_back(g.support_mask());

    // Faces are the subsets containing no generator support; facets are the
    // maximal ones.  Branch on one offending support at a time: every
    // maximal face survives along some branch.
    std::vector<VertexSet> leaves;
    std::unordered_set<VertexSet> visited;
    std::vector<VertexSet> stack{full};
    while (!stack.empty()) {
        const VertexSet cur = stack.back();
        stack.pop_back();
        if (!visited.insert(cur).second) continue;
        VertexSet offender = 0;
        bool independent = true;
        for (VertexSet s : supports) {
            if (subset_of(s, cur)) {
                offender = s;
                independent = false;
                break;
            }
        }
        if (independent) {
            leaves.push_back(cur);
            continue;
        }
        for (int v : set_bits(offender)) stack.push_back(cur & ~vbit(v));
    }
    return SimplicialComplex::from_facets(ideal.context.variable_names, std::move(leaves));
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex)
{
    if (complex.is_void()) throw DomainError("minimal_nonfaces: void complex");
    const int n = complex.ground_size();
    if (n > kMaxEnumerationGround) throw CapError("ground set too large for exhaustive non-face enumeration");

    const std::size_t total = std::size_t{1} << n;
    std::vector<bool> is_face(total, false);
    for (std::size_t s = 0; s < total; ++s) is_face[s] = complex.contains(static_cast<VertexSet>(s));

    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < total; ++s) {
        if (is_face[s]) continue;
        bool minimal = true;
        VertexSet rest = static_cast<VertexSet>(s);
        while (rest) {
            const VertexSet sub = static_cast<VertexSet>(s) & ~(rest & (~rest + 1));
            rest &= rest - 1;
            if (!is_face[sub]) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(static_cast<VertexSet>(s));
    }
    std::sort(out.begin(), out.end(), tuple_lex_less);
    return out;
}

MonomialIdeal ideal_from_complex(const SimplicialComplex& complex)
{
    if (complex.is_void()) throw DomainError("ideal_from_complex: void complex");
    PolynomialContext ctx{complex.ground()};
    std::vector<Monomial> gens;
    for (VertexSet nf : minimal_nonfaces(complex)) {
        Monomial m = Monomial::one(ctx.n());
        for (int v : set_bits(nf)) m.exponents[static_cast<std::size_t>(v)] = 1;
        gens.push_back(std::move(m));
    }
    return minimalize(std::move(gens), ctx);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w)
{
    const std::vector<int> verts = set_bits(w);
    for (int v : verts) {
        if (v >= complex.ground_size()) throw DomainError("induced_subcomplex: vertex outside ground");
    }
    std::vector<std::string> ground;
    ground.reserve(verts.size());
    std::vector<int> reindex(static_cast<std::size_t>(complex.ground_size()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        ground.push_back(complex.ground()[static_cast<std::size_t>(verts[i])]);
        reindex[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    }
    if (complex.is_void()) return SimplicialComplex::from_facets(std::move(ground), {});
    std::vector<VertexSet> cut;
    cut.reserve(complex.facets().size());
    for (VertexSet f : complex.facets()) {
        VertexSet g = 0;
        for (int v : set_bits(f & w)) g |= vbit(reindex[static_cast<std::size_t>(v)]);
        cut.push_back(g);
    }
    return SimplicialComplex::from_facets(std::move(ground), std::move(cut));
}

SimplicialComplex restrict_within(const SimplicialComplex& complex, VertexSet w)
{
    if (complex.is_void()) return complex;
    std::vector<VertexSet> cut;
    cut.reserve(complex.facets().size());
    for (VertexSet f : complex.facets()) cut.push_back(f & w);
    return SimplicialComplex::from_facets(complex.ground(), std::move(cut));
}

SimplicialComplex union_of_subcomplexes(const std::vector<SimplicialComplex>& parts)
{
    if (parts.empty()) throw DomainError("union_of_subcomplexes: empty part list");
    for (const auto& p : parts) {
        if (p.ground() != parts.front().ground()) throw DomainError("union_of_subcomplexes: mismatched grounds");
    }
    std::vector<VertexSet> all;
    for (const auto& p : parts) all.insert(all.end(), p.facets().begin(), p.facets().end());
    return SimplicialComplex::from_facets(parts.front().ground(), std::move(all));
}

} // namespace betti
