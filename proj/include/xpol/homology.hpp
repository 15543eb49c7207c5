#pragma once

// Integral simplicial homology: boundary matrices of the augmented chain
// complex, Smith normal form over arbitrary-precision integers, reduced
// homology groups and Betti numbers.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "xpol/complex.hpp"

namespace xpol {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct BoundaryMatrix {
  std::vector<Face> row_faces;  // (j-1)-faces; the single ∅ face when j = 0
  std::vector<Face> col_faces;  // j-faces
  IntMatrix m;
};

// ∂_j of the augmented chain complex: entry (ρ, σ) = (-1)^p when ρ = σ minus
// its p-th vertex in (coord, sign) order. Requires 0 ≤ j ≤ dim K.
BoundaryMatrix boundary_matrix(const Complex& K, int j);
// Same, with the closure supplied to avoid recomputation.
BoundaryMatrix boundary_matrix(const FaceClosure& cl, int j);

struct SNFResult {
  std::vector<mpz_class> diagonal;  // d_1 | d_2 | ..., padded with zeros
  std::size_t rank = 0;             // number of nonzero entries
};

// Smith normal form with minimal-|pivot| selection and a final pairwise
// gcd/lcm pass enforcing the divisibility chain.
SNFResult smith_normal_form(IntMatrix m);

struct HomologyGroup {
  int degree = 0;
  long long rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Reduced homology in degrees 0..dim (degree -1 alone for the complex {∅}).
// Throws on the void complex.
std::vector<HomologyGroup> reduced_homology(const Complex& K);

// Single reduced Betti number (two boundary-matrix ranks); handles j = -1.
long long reduced_betti(const Complex& K, int j);

// Unreduced Betti numbers, degrees 0..dim.
std::vector<long long> betti(const Complex& K);

}  // namespace xpol
