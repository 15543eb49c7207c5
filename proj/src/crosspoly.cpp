#include "xpol/crosspoly.hpp"

#include <bit>
#include <stdexcept>

#include "xpol/binomial.hpp"

namespace xpol {

void validate(const BIDParams& p) {
  if (p.d < 1 || p.d > kMaxCoord)
    throw std::invalid_argument("d must be between 1 and " + std::to_string(kMaxCoord));
  if (p.i < -1 || p.i > p.d - 1)
    throw std::invalid_argument("i must be between -1 and d-1 = " +
                                std::to_string(p.d - 1));
}

std::string word_of_facet(const Face& facet, int d) {
  if (!facet.valid() || !facet.within(d) || facet.support() != coord_mask(d))
    throw std::invalid_argument("word form requires a full-support facet");
  std::string w((std::size_t)d, 'x');
  for (int j = 0; j < d; ++j)
    if ((facet.ybits >> j) & 1u) w[(std::size_t)j] = 'y';
  return w;
}

Face facet_of_word(const std::string& word) {
  int d = (int)word.size();
  if (d < 1 || d > kMaxCoord)
    throw std::invalid_argument("word length must be between 1 and " +
                                std::to_string(kMaxCoord));
  Face f;
  for (int j = 0; j < d; ++j) {
    char c = word[(std::size_t)j];
    if (c == 'y') f.ybits |= 1u << j;
    else if (c == 'x') f.xbits |= 1u << j;
    else throw std::invalid_argument("word may only contain 'x' and 'y'");
  }
  return f;
}

std::uint32_t switch_mask(const Face& facet, int d) {
  if (!facet.valid() || facet.support() != coord_mask(d))
    throw std::invalid_argument("switch set requires a full-support facet");
  if (d == 1) return 0;
  return (facet.ybits ^ (facet.ybits >> 1)) & coord_mask(d - 1);
}

int switch_count(const Face& facet, int d) {
  return std::popcount(switch_mask(facet, d));
}

std::vector<int> mask_elements(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

Face fill(const Face& sigma, int d) {
  if (d < 1 || d > kMaxCoord) throw std::invalid_argument("d out of range");
  if (!sigma.valid() || !sigma.within(d))
    throw std::invalid_argument("face not within the ambient dimension");
  if (sigma.empty()) return Face{coord_mask(d), 0};
  std::uint32_t supp = sigma.support();
  int top = 31 - std::countl_zero(supp);  // highest specified coordinate - 1
  bool cur = ((sigma.ybits >> top) & 1u) != 0;
  Face out;
  for (int j = d - 1; j >= 0; --j) {
    if ((supp >> j) & 1u) cur = ((sigma.ybits >> j) & 1u) != 0;
    if (cur) out.ybits |= 1u << j; else out.xbits |= 1u << j;
  }
  return out;
}

bool is_face_of_b(const Face& sigma, const BIDParams& p) {
  validate(p);
  if (!sigma.valid() || !sigma.within(p.d))
    throw std::invalid_argument("face not within the ambient dimension");
  if (p.i < 0) return false;  // B(-1,d) is the void complex
  return switch_count(fill(sigma, p.d), p.d) <= p.i;
}

long long b_facet_count_formula(const BIDParams& p) {
  validate(p);
  long long n = 0;
  for (int k = 0; k <= p.i; ++k) n += binom_ll(p.d - 1, k);
  return 2 * n;
}

namespace {

// The facet whose word starts with first_y and flips exactly at the switch
// positions in J ⊆ [d-1].
Face facet_from_switches(std::uint32_t J, bool first_y, int d) {
  Face f;
  bool cur = first_y;
  for (int j = 0; j < d; ++j) {
    if (j > 0 && ((J >> (j - 1)) & 1u)) cur = !cur;
    if (cur) f.ybits |= 1u << j; else f.xbits |= 1u << j;
  }
  return f;
}

// All subsets of [d-1] with lo ≤ |J| ≤ hi, applied to fn.
template <typename Fn>
void for_switch_subsets(int d, int lo, int hi, Fn fn) {
  for (int k = std::max(lo, 0); k <= std::min(hi, d - 1); ++k) {
    if (k == 0) { fn(0u); continue; }
    std::uint32_t J = (1u << k) - 1u;
    std::uint32_t limit = coord_mask(d - 1);
    while (J <= limit) {
      fn(J);
      std::uint32_t c = J & (~J + 1), r = J + c;
      std::uint32_t next = (((r ^ J) >> 2) / c) | r;
      if (next <= J) break;
      J = next;
    }
  }
}

}  // namespace

Complex build_b(const BIDParams& p) {
  validate(p);
  if (p.i < 0) return Complex::void_complex(p.d);
  std::vector<Face> facets;
  facets.reserve((std::size_t)b_facet_count_formula(p));
  for_switch_subsets(p.d, 0, p.i, [&](std::uint32_t J) {
    facets.push_back(facet_from_switches(J, false, p.d));
    facets.push_back(facet_from_switches(J, true, p.d));
  });
  return Complex::from_facets(p.d, std::move(facets));
}

Complex build_complement(const BIDParams& p) {
  validate(p);
  std::vector<Face> facets;
  for_switch_subsets(p.d, p.i + 1, p.d - 1, [&](std::uint32_t J) {
    facets.push_back(facet_from_switches(J, false, p.d));
    facets.push_back(facet_from_switches(J, true, p.d));
  });
  return Complex::from_facets(p.d, std::move(facets));
}

Complex build_boundary(const BIDParams& p) {
  validate(p);
  if (p.i < 0 || p.i > p.d - 2)
    throw std::invalid_argument(
        "boundary requires 0 <= i <= d-2 (B(d-1,d) is closed)");
  return boundary_complex(build_b(p));
}

Face complement_involution(const Face& f) {
  const std::uint32_t even = 0xaaaaaaaau;  // bits of even coordinates
  return Face{(f.xbits & ~even) | (f.ybits & even),
              (f.ybits & ~even) | (f.xbits & even)};
}

Complex complement_involution(const Complex& K) {
  std::vector<Face> facets;
  facets.reserve(K.facet_count());
  for (const Face& f : K.facets()) facets.push_back(complement_involution(f));
  return Complex::from_facets(K.ambient_d(), std::move(facets));
}

}  // namespace xpol
