#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "xpol/crosspoly.hpp"
#include "xpol/homology.hpp"

using namespace xpol;

namespace {

Face F(std::initializer_list<VertexLabel> ls) { return Face::of(ls); }

// A facet given by positive coordinates only.
Face X(std::initializer_list<int> coords) {
  Face f;
  for (int c : coords) f = f.with({c, false});
  return f;
}

IntMatrix mat(std::size_t r, std::size_t c,
              std::initializer_list<long long> entries) {
  IntMatrix m(r, c);
  std::size_t k = 0;
  for (long long v : entries) m.a[k++] = (long)v;
  return m;
}

std::vector<long long> diag_ll(const SNFResult& s) {
  std::vector<long long> out;
  for (const mpz_class& v : s.diagonal) out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("smith normal form of small matrices") {
  SNFResult s = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
  CHECK(diag_ll(s) == std::vector<long long>{2, 4});
  CHECK(s.rank == 2);

  s = smith_normal_form(mat(2, 2, {1, 0, 0, 1}));
  CHECK(diag_ll(s) == std::vector<long long>{1, 1});

  s = smith_normal_form(mat(2, 3, {0, 0, 0, 0, 0, 0}));
  CHECK(diag_ll(s) == std::vector<long long>{0, 0});
  CHECK(s.rank == 0);

  // invariant factors divide each other: diag(2,3) ~ (1,6)
  s = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
  CHECK(diag_ll(s) == std::vector<long long>{1, 6});

  // a rank-1 matrix with a common factor
  s = smith_normal_form(mat(2, 2, {6, 10, 9, 15}));
  CHECK(s.rank == 1);
  CHECK(diag_ll(s)[0] == 1);

  s = smith_normal_form(mat(1, 1, {-7}));
  CHECK(diag_ll(s) == std::vector<long long>{7});

  s = smith_normal_form(IntMatrix(0, 5));
  CHECK(s.rank == 0);
  CHECK(s.diagonal.empty());
}

TEST_CASE("boundary matrices compose to zero") {
  Complex K = build_b({2, 4});
  FaceClosure cl = enumerate_faces(K);
  for (int j = 1; j <= K.dim(); ++j) {
    BoundaryMatrix hi = boundary_matrix(cl, j);
    BoundaryMatrix lo = boundary_matrix(cl, j - 1);
    REQUIRE(lo.col_faces == hi.row_faces);
    // (lo · hi) = 0
    for (std::size_t r = 0; r < lo.m.rows; ++r)
      for (std::size_t c = 0; c < hi.m.cols; ++c) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < lo.m.cols; ++k)
          acc += lo.m.at(r, k) * hi.m.at(k, c);
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("boundary matrix of an edge and the augmentation") {
  Complex K = Complex::from_facets(2, {F({{1, false}, {2, true}})});
  BoundaryMatrix b1 = boundary_matrix(K, 1);
  REQUIRE(b1.m.rows == 2);
  REQUIRE(b1.m.cols == 1);
  // ∂{x1,y2} = {y2} - {x1} with vertices ordered x1 < y2
  CHECK(b1.row_faces[0] == F({{1, false}}));
  CHECK(b1.row_faces[1] == F({{2, true}}));
  CHECK(b1.m.at(0, 0) == -1);
  CHECK(b1.m.at(1, 0) == 1);

  BoundaryMatrix b0 = boundary_matrix(K, 0);
  REQUIRE(b0.m.rows == 1);  // the empty face
  CHECK(b0.row_faces[0] == Face());
  CHECK(b0.m.at(0, 0) == 1);
  CHECK(b0.m.at(0, 1) == 1);

  CHECK_THROWS_AS(boundary_matrix(K, 2), std::invalid_argument);
  CHECK_THROWS_AS(boundary_matrix(K, -1), std::invalid_argument);
}

TEST_CASE("spheres of every small dimension") {
  for (int d = 1; d <= 5; ++d) {
    Complex K = build_b({d - 1, d});  // C*_d ≅ S^(d-1)
    std::vector<HomologyGroup> h = reduced_homology(K);
    REQUIRE(h.size() == (std::size_t)d);
    for (int j = 0; j <= d - 1; ++j) {
      CHECK(h[(std::size_t)j].degree == j);
      CHECK(h[(std::size_t)j].rank == (j == d - 1 ? 1 : 0));
      CHECK(h[(std::size_t)j].torsion.empty());
    }
  }
}

TEST_CASE("reduced homology of tiny complexes") {
  // two disjoint triangles: one extra component, nothing else
  std::vector<HomologyGroup> h = reduced_homology(build_b({0, 3}));
  CHECK(h[0] == HomologyGroup{0, 1, {}});
  CHECK(h[1] == HomologyGroup{1, 0, {}});
  CHECK(h[2] == HomologyGroup{2, 0, {}});

  // the complex {∅} has reduced homology Z in degree -1
  std::vector<HomologyGroup> e =
      reduced_homology(Complex::from_facets(3, {Face()}));
  REQUIRE(e.size() == 1);
  CHECK(e[0] == HomologyGroup{-1, 1, {}});

  CHECK_THROWS_AS(reduced_homology(Complex::void_complex(3)),
                  std::invalid_argument);

  // a single point is acyclic
  std::vector<HomologyGroup> pt =
      reduced_homology(Complex::from_facets(3, {F({{1, false}})}));
  REQUIRE(pt.size() == 1);
  CHECK(pt[0] == HomologyGroup{0, 0, {}});
}

TEST_CASE("torsion: a 6-vertex real projective plane") {
  // The standard vertex-minimal triangulation; H~_1 = Z/2.
  std::vector<Face> facets;
  for (std::initializer_list<int> t :
       {std::initializer_list<int>{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6},
        {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}})
    facets.push_back(X(t));
  Complex rp2 = Complex::from_facets(6, facets);
  CHECK(euler_char(rp2) == 1);
  std::vector<HomologyGroup> h = reduced_homology(rp2);
  CHECK(h[0] == HomologyGroup{0, 0, {}});
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].rank == 0);
  CHECK(h[1].torsion[0] == 2);
  CHECK(h[2] == HomologyGroup{2, 0, {}});
}

TEST_CASE("the B family is a homology sphere in one degree") {
  for (int d = 1; d <= 5; ++d)
    for (int i = 0; i <= d - 1; ++i) {
      std::vector<HomologyGroup> h = reduced_homology(build_b({i, d}));
      for (const HomologyGroup& g : h) {
        CHECK(g.rank == (g.degree == i ? 1 : 0));
        CHECK(g.torsion.empty());
      }
    }
}

TEST_CASE("the boundary of B(1,4) is a torus") {
  Complex T = build_boundary({1, 4});
  CHECK(betti(T) == std::vector<long long>{1, 2, 1});
  std::vector<HomologyGroup> h = reduced_homology(T);
  CHECK(h[0] == HomologyGroup{0, 0, {}});
  CHECK(h[1] == HomologyGroup{1, 2, {}});
  CHECK(h[2] == HomologyGroup{2, 1, {}});
}

TEST_CASE("single Betti numbers take the two-matrix shortcut") {
  for (int d = 2; d <= 5; ++d)
    for (int i = 0; i <= d - 1; ++i) {
      Complex K = build_b({i, d});
      std::vector<HomologyGroup> h = reduced_homology(K);
      for (int j = 0; j <= K.dim(); ++j)
        CHECK(reduced_betti(K, j) == h[(std::size_t)j].rank);
      CHECK(reduced_betti(K, -1) == 0);
      CHECK(reduced_betti(K, K.dim() + 1) == 0);
    }
  CHECK(reduced_betti(Complex::from_facets(3, {Face()}), -1) == 1);
}

}  // TEST_SUITE
