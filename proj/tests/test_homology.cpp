#include "betti/homology.hpp"

#include "betti/errors.hpp"
#include "betti/simplicial.hpp"

#include <doctest.h>

#include <random>

using namespace betti;

namespace {

std::vector<std::string> labels(int n)
{
    return PolynomialContext::standard(n).variable_names;
}

VertexSet verts(std::initializer_list<int> vs)
{
    VertexSet s = 0;
    for (int v : vs) s |= vbit(v - 1);
    return s;
}

SimplicialComplex hollow_square()
{
    return SimplicialComplex::from_facets(labels(4),
                                          {verts({1, 2}), verts({2, 3}), verts({3, 4}), verts({1, 4})});
}

// The 6-vertex triangulation of the real projective plane: 10 triangles,
// every edge in exactly two of them, Euler characteristic 6 - 15 + 10 = 1.
SimplicialComplex projective_plane()
{
    const std::vector<std::initializer_list<int>> triangles = {
        {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
        {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
    std::vector<VertexSet> facets;
    for (const auto& t : triangles) facets.push_back(verts(t));
    return SimplicialComplex::from_facets(labels(6), std::move(facets));
}

SimplicialComplex random_complex(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nf(1, 5);
    std::uniform_int_distribution<VertexSet> face(0, 63); // subsets of 6 vertices
    std::vector<VertexSet> facets;
    const int count = nf(rng);
    for (int i = 0; i < count; ++i) facets.push_back(face(rng));
    return SimplicialComplex::from_facets(labels(6), std::move(facets));
}

} // namespace

TEST_SUITE("homology")
{
    TEST_CASE("boundary matrix shapes and entries")
    {
        const auto c = hollow_square();
        // Rows of d_0 form the augmentation: one row, all ones.
        const Matrix d0 = boundary_matrix(c, 0);
        CHECK(d0.rows == 1);
        CHECK(d0.cols == 4);
        for (int j = 0; j < 4; ++j) CHECK(d0.at(0, j) == 1);

        const Matrix d1 = boundary_matrix(c, 1);
        CHECK(d1.rows == 4);
        CHECK(d1.cols == 4);
        // Each edge column has one +1 and one -1.
        for (int j = 0; j < d1.cols; ++j) {
            int plus = 0, minus = 0, zero = 0;
            for (int i = 0; i < d1.rows; ++i) {
                if (d1.at(i, j) == 1) ++plus;
                else if (d1.at(i, j) == -1) ++minus;
                else ++zero;
            }
            CHECK(plus == 1);
            CHECK(minus == 1);
            CHECK(zero == 2);
        }
        CHECK_THROWS_AS(boundary_matrix(SimplicialComplex::from_facets(labels(2), {}), 0), DomainError);
    }

    TEST_CASE("boundary composition vanishes on random complexes")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            const auto c = random_complex(rng);
            if (c.is_void()) continue;
            for (int k = 0; k <= c.dim(); ++k) {
                const Matrix outer = boundary_matrix(c, k);
                const Matrix inner = boundary_matrix(c, k + 1);
                if (inner.cols == 0) continue;
                CHECK(is_zero_matrix(multiply(outer, inner)));
            }
        }
    }

    TEST_CASE("reduced homology of standard examples")
    {
        const FieldSpec q = FieldSpec::rationals();

        // Circle (hollow square): only H~_1 = 1.
        const auto circle = hollow_square();
        CHECK(reduced_homology_dim(circle, -1, q) == 0);
        CHECK(reduced_homology_dim(circle, 0, q) == 0);
        CHECK(reduced_homology_dim(circle, 1, q) == 1);
        CHECK(reduced_homology_dim(circle, 2, q) == 0);

        // Two points: H~_0 = 1.
        const auto points = SimplicialComplex::from_facets(labels(2), {verts({1}), verts({2})});
        CHECK(reduced_homology_dim(points, 0, q) == 1);
        CHECK(reduced_homology_dim(points, 1, q) == 0);

        // Full simplex: contractible.
        const auto full = SimplicialComplex::from_facets(labels(3), {verts({1, 2, 3})});
        for (int k = -1; k <= 2; ++k) CHECK(reduced_homology_dim(full, k, q) == 0);

        // Irrelevant complex: H~_{-1} = 1.
        const auto irrelevant = SimplicialComplex::from_facets(labels(2), {0});
        CHECK(reduced_homology_dim(irrelevant, -1, q) == 1);
        CHECK(reduced_homology_dim(irrelevant, 0, q) == 0);

        // Void complex: zero in every degree.
        const auto none = SimplicialComplex::from_facets(labels(2), {});
        for (int k = -1; k <= 1; ++k) CHECK(reduced_homology_dim(none, k, q) == 0);

        // Sphere (boundary of the tetrahedron): only H~_2 = 1.
        const auto sphere = SimplicialComplex::from_facets(
            labels(4), {verts({1, 2, 3}), verts({1, 2, 4}), verts({1, 3, 4}), verts({2, 3, 4})});
        CHECK(reduced_homology_dim(sphere, 0, q) == 0);
        CHECK(reduced_homology_dim(sphere, 1, q) == 0);
        CHECK(reduced_homology_dim(sphere, 2, q) == 1);

        // Degrees below -1 are zero by convention.
        CHECK(reduced_homology_dim(circle, -2, q) == 0);
    }

    TEST_CASE("projective plane homology depends on the characteristic")
    {
        const auto rp2 = projective_plane();
        REQUIRE(rp2.faces_of_dim(1).size() == 15);
        REQUIRE(rp2.faces_of_dim(2).size() == 10);

        for (int k = 0; k <= 2; ++k) CHECK(reduced_homology_dim(rp2, k, FieldSpec::rationals()) == 0);

        CHECK(reduced_homology_dim(rp2, 0, FieldSpec::gf(2)) == 0);
        CHECK(reduced_homology_dim(rp2, 1, FieldSpec::gf(2)) == 1);
        CHECK(reduced_homology_dim(rp2, 2, FieldSpec::gf(2)) == 1);

        // Characteristic 3 behaves like characteristic 0 here.
        for (int k = 0; k <= 2; ++k) CHECK(reduced_homology_dim(rp2, k, FieldSpec::gf(3)) == 0);
    }

    TEST_CASE("Euler characteristic equals the alternating homology sum")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            const auto c = random_complex(rng);
            if (c.is_void()) continue;
            long long faces_alt = 0, hom_alt = 0;
            for (int k = -1; k <= c.dim(); ++k) {
                const long long sign = (k % 2 == 0) ? 1 : -1;
                faces_alt += sign * static_cast<long long>(c.faces_of_dim(k).size());
                hom_alt += sign * reduced_homology_dim(c, k, FieldSpec::rationals());
            }
            CHECK(faces_alt == hom_alt);
        }
    }
}
