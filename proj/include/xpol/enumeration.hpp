#pragma once

// Closed-form face enumeration for the B(i,d) family, the h/g boundary
// identity, homology-corrected h' and flag-h' vectors, and the
// centrally-symmetric upper bound check with its equality-case analysis.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "xpol/crosspoly.hpp"
#include "xpol/homology.hpp"

namespace xpol {

// h_j(B(i,d)) = C(d,j) for j ≤ i+1, else (-1)^{j-i-1} C(d,j); entries 0..d.
std::vector<long long> h_closed_form(int i, int d);

// g_k(∂B(i,d)) for k = 0..d, valid for 0 ≤ i ≤ (d-2)/2; partial sums give
// h_j(∂B(i,d)) with implied h_d = 0. Cases: C(d,k) for k ≤ i+1,
// (-1)^{k-i-1} C(d,k) for i+1 ≤ k ≤ d-i-1, and
// -((-1)^{k-i} + (-1)^{d-k-i} + 1) C(d,k) for k ≥ d-i-1.
std::vector<long long> g_boundary_closed_form(int i, int d);
// The three case formulas individually, each with its applicability range
// (used to confirm the overlaps agree rather than privileging one case).
std::optional<long long> g_boundary_case(int which, int i, int d, int k);

// h_{d-j}(Δ) - h_j(Δ) = (-1)^{d-j-1} C(d,j) χ̃(Δ) - g_j(∂Δ) for Δ = B(i,d),
// with every ingredient computed by brute force. Requires 0 ≤ i ≤ d-2.
bool ns_identity_check(int i, int d);

// h'_j = h_j + C(dim+1, j) Σ_{k=1}^{j-1} (-1)^{j-k-1} β̃_{k-1}(K).
std::vector<long long> h_prime(const Complex& K);

// flag-h'_S = β̃_{|S|-1}(K_S).
long long flag_h_prime(const Complex& K, std::uint32_t S);

// Generalized binomial C(q, m) = Π_{t=0}^{m-1} (q-t) / m! over the rationals.
mpq_class binom_rational(const mpq_class& q, int m);

struct SparlaReport {
  int r = 0;
  int k = 0;          // half the vertex count of the manifold
  long long chi = 0;  // (unreduced) Euler characteristic
  mpq_class lhs, rhs;
  bool holds = false;
  bool equality = false;
  std::optional<bool> skeleton_present;  // filled when a complex was analyzed
};

// (-1)^r C(2r+1, r+1) (chi - 2) ≤ 4^{r+1} C((k-1)/2, r+1), evaluated exactly.
SparlaReport sparla_check(long long chi, int r, int k);

struct SparlaCounterexample {
  int i = 0, d = 0;
  SparlaReport report;        // for M = ∂B(i, 2r+2), with skeleton_present set
  long long betti_i = 0;      // reduced Betti number of M in degree i
  Face missing_face;          // an r-face of C*_d absent from M
  bool missing_face_found = false;
};

// Equality case with the r-skeleton absent: requires 0 ≤ i < r and
// i ≡ r (mod 2); builds M = ∂B(i, 2r+2) and reports the witnesses.
SparlaCounterexample sparla_counterexample_report(int r, int i);

}  // namespace xpol
