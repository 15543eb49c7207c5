#include "xpol/enumeration.hpp"

#include <bit>
#include <stdexcept>

#include "xpol/binomial.hpp"

namespace xpol {

std::vector<long long> h_closed_form(int i, int d) {
  validate({i, d});
  if (i < 0) throw std::invalid_argument("closed form requires i >= 0");
  std::vector<long long> h((std::size_t)d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long c = binom_ll(d, j);
    h[(std::size_t)j] = (j <= i + 1) ? c : ((j - i - 1) % 2 == 0 ? c : -c);
  }
  return h;
}

std::optional<long long> g_boundary_case(int which, int i, int d, int k) {
  long long c = binom_ll(d, k);
  switch (which) {
    case 1:
      if (k <= i + 1) return c;
      return std::nullopt;
    case 2:
      if (i + 1 <= k && k <= d - i - 1)
        return (k - i - 1) % 2 == 0 ? c : -c;
      return std::nullopt;
    case 3:
      if (k >= d - i - 1) {
        long long s1 = (k - i) % 2 == 0 ? 1 : -1;
        long long s2 = (d - k - i) % 2 == 0 ? 1 : -1;
        return -(s1 + s2 + 1) * c;
      }
      return std::nullopt;
    default:
      throw std::invalid_argument("case must be 1, 2 or 3");
  }
}

std::vector<long long> g_boundary_closed_form(int i, int d) {
  validate({i, d});
  if (i < 0 || 2 * i > d - 2)
    throw std::invalid_argument(
        "g closed form requires 0 <= i <= (d-2)/2; use the complementary "
        "parameters otherwise");
  std::vector<long long> g((std::size_t)d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    std::optional<long long> v = g_boundary_case(1, i, d, k);
    if (!v) v = g_boundary_case(2, i, d, k);
    if (!v) v = g_boundary_case(3, i, d, k);
    g[(std::size_t)k] = *v;
  }
  return g;
}

bool ns_identity_check(int i, int d) {
  validate({i, d});
  if (i < 0 || i > d - 2)
    throw std::invalid_argument("identity check requires 0 <= i <= d-2");
  Complex B = build_b({i, d});
  Complex dB = build_boundary({i, d});
  std::vector<long long> h = h_vector(B).h;          // h_0..h_d
  std::vector<long long> hb = h_vector(dB).h;        // h_0..h_{d-1}
  hb.push_back(0);                                   // implied h_d(∂Δ) = 0
  long long chi = reduced_euler_char(B);
  for (int j = 0; j <= d; ++j) {
    long long g = hb[(std::size_t)j] - (j == 0 ? 0 : hb[(std::size_t)j - 1]);
    long long lhs = h[(std::size_t)(d - j)] - h[(std::size_t)j];
    long long sign = (d - j - 1) % 2 == 0 ? 1 : -1;
    long long rhs = sign * binom_ll(d, j) * chi - g;
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<long long> h_prime(const Complex& K) {
  std::vector<long long> h = h_vector(K).h;
  const int D = (int)h.size() - 1;  // dim + 1
  std::vector<long long> beta((std::size_t)std::max(D - 1, 0), 0);
  if (K.dim() >= 0) {
    std::vector<HomologyGroup> hom = reduced_homology(K);
    for (const HomologyGroup& g : hom)
      if (g.degree >= 0 && g.degree < (int)beta.size())
        beta[(std::size_t)g.degree] = g.rank;
  }
  std::vector<long long> out = h;
  for (int j = 0; j <= D; ++j) {
    long long acc = 0;
    for (int k = 1; k <= j - 1; ++k) {
      long long b = beta[(std::size_t)(k - 1)];
      acc += ((j - k - 1) % 2 == 0) ? b : -b;
    }
    out[(std::size_t)j] += binom_ll(D, j) * acc;
  }
  return out;
}

long long flag_h_prime(const Complex& K, std::uint32_t S) {
  return reduced_betti(rank_selected(K, S), std::popcount(S) - 1);
}

mpq_class binom_rational(const mpq_class& q, int m) {
  if (m < 0) throw std::invalid_argument("lower index must be nonnegative");
  mpq_class acc = 1;
  for (int t = 0; t < m; ++t) {
    acc *= q - t;
    acc /= t + 1;
  }
  acc.canonicalize();
  return acc;
}

SparlaReport sparla_check(long long chi, int r, int k) {
  if (r < 0 || k < 1) throw std::invalid_argument("require r >= 0 and k >= 1");
  SparlaReport rep;
  rep.r = r;
  rep.k = k;
  rep.chi = chi;
  mpz_class coeff(std::to_string(binom_ll(2 * r + 1, r + 1)));
  if (r % 2 != 0) coeff = -coeff;
  rep.lhs = mpq_class(coeff * mpz_class(std::to_string(chi - 2)));
  mpq_class half(k - 1, 2);
  half.canonicalize();
  mpz_class pow4 = 1;
  mpz_ui_pow_ui(pow4.get_mpz_t(), 4, (unsigned long)(r + 1));
  rep.rhs = mpq_class(pow4) * binom_rational(half, r + 1);
  rep.rhs.canonicalize();
  rep.lhs.canonicalize();
  rep.holds = rep.lhs <= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;
  return rep;
}

SparlaCounterexample sparla_counterexample_report(int r, int i) {
  if (r < 1 || i < 0 || i >= r)
    throw std::invalid_argument("require 0 <= i < r");
  if ((r - i) % 2 != 0)
    throw std::invalid_argument(
        "equality-case analysis requires i and r of equal parity");
  SparlaCounterexample out;
  out.i = i;
  out.d = 2 * r + 2;
  Complex M = build_boundary({i, out.d});
  out.report = sparla_check(euler_char(M), r, out.d);
  out.report.skeleton_present = contains_skeleton(M, r);
  out.betti_i = reduced_betti(M, i);

  // First r-face of C*_d (in support-then-sign order) that is not in M.
  FaceClosure cl = enumerate_faces(M);
  const std::uint32_t all = coord_mask(out.d);
  std::uint32_t supp = (1u << (r + 1)) - 1u;
  while (supp <= all && !out.missing_face_found) {
    std::vector<int> coords;
    for (std::uint32_t s = supp; s; s &= s - 1)
      coords.push_back(std::countr_zero(s));
    for (std::uint32_t signs = 0; signs < (1u << (r + 1)); ++signs) {
      Face f;
      for (int t = 0; t <= r; ++t) {
        std::uint32_t bit = 1u << coords[(std::size_t)t];
        if ((signs >> t) & 1u) f.ybits |= bit; else f.xbits |= bit;
      }
      if (!cl.contains(f)) {
        out.missing_face = f;
        out.missing_face_found = true;
        break;
      }
    }
    std::uint32_t c = supp & (~supp + 1), rr = supp + c;
    std::uint32_t next = (((rr ^ supp) >> 2) / c) | rr;
    if (next <= supp) break;
    supp = next;
  }
  return out;
}

}  // namespace xpol
