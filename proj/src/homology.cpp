#include "betti/homology.hpp"

#include "betti/errors.hpp"

#include <unordered_map>

namespace betti {

Matrix boundary_matrix(const SimplicialComplex& complex, int k)
{
    if (complex.is_void()) throw DomainError("boundary_matrix: void complex");
    if (k < 0) throw DomainError("boundary_matrix: k must be >= 0");
    const auto& rows = complex.faces_of_dim(k - 1);
    const auto& cols = complex.faces_of_dim(k);
    std::unordered_map<VertexSet, int> row_index;
    row_index.reserve(rows.size() * 2);
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<int>(r));

    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const VertexSet face = cols[c];
        int pos = 0;
        for (int v : set_bits(face)) {
            // Subfaces of a face are faces, so the lookup always hits.
            const int r = row_index.at(face & ~vbit(v));
            m.at(r, static_cast<int>(c)) = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        }
    }
    return m;
}

int reduced_homology_dim(const SimplicialComplex& complex, int k, FieldSpec field)
{
    if (complex.is_void()) return 0;
    if (k < -1) return 0;
    const int faces_k = static_cast<int>(complex.faces_of_dim(k).size());
    if (faces_k == 0) return 0;
    const int rank_dk = (k == -1) ? 0 : rank(boundary_matrix(complex, k), field);
    const int rank_dk1 = rank(boundary_matrix(complex, k + 1), field);
    return faces_k - rank_dk - rank_dk1;
}

} // namespace betti
