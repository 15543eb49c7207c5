#include "xpol/shelling.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "xpol/symmetry.hpp"

namespace xpol {

int prec_compare(std::uint32_t I, std::uint32_t J) {
  int pi = std::popcount(I), pj = std::popcount(J);
  if (pi != pj) return pi < pj ? -1 : 1;
  std::uint32_t diff = I ^ J;
  if (diff == 0) return 0;
  std::uint32_t low = diff & (~diff + 1);
  return (I & low) ? -1 : 1;
}

Face swel(const Face& facet, int d) {
  std::uint32_t sw = switch_mask(facet, d);  // validates full support
  return Face{facet.xbits & sw, facet.ybits & sw};
}

Face xd_facet_with_switches(std::uint32_t J, int d) {
  if (d < 1 || d > kMaxCoord) throw std::invalid_argument("d out of range");
  if ((J & ~coord_mask(d - 1)) != 0)
    throw std::invalid_argument("switch set not within [d-1]");
  // Specified coordinates alternate in sign from the top: the largest switch
  // position gets y, the next x, and so on; then fill and adjoin x_d.
  std::vector<int> elems = mask_elements(J);
  Face sigma;
  bool neg = true;
  for (std::size_t s = elems.size(); s-- > 0;) {
    std::uint32_t bit = 1u << (elems[s] - 1);
    if (neg) sigma.ybits |= bit; else sigma.xbits |= bit;
    neg = !neg;
  }
  sigma.xbits |= 1u << (d - 1);
  return fill(sigma, d);
}

ShellingOrder star_shelling(const BIDParams& p, VertexLabel apex) {
  validate(p);
  if (p.i < 0) throw std::invalid_argument("star shelling requires i >= 0");
  if (apex.coord != p.d)
    throw std::invalid_argument("apex must be x_d or y_d");

  std::vector<std::uint32_t> subsets;
  for (std::uint32_t J = 0; J <= coord_mask(p.d - 1) && p.d > 1; ++J)
    if (std::popcount(J) <= p.i) subsets.push_back(J);
  if (p.d == 1) subsets.push_back(0);
  std::sort(subsets.begin(), subsets.end(),
            [](std::uint32_t a, std::uint32_t b) { return prec_compare(a, b) < 0; });

  VertexPermutation D = VertexPermutation::generator(Generator::D, p.d);
  ShellingOrder out;
  out.facets.reserve(subsets.size());
  out.restrictions.reserve(subsets.size());
  for (std::uint32_t J : subsets) {
    Face f = xd_facet_with_switches(J, p.d);
    if (apex.neg) f = D(f);  // D maps star(x_d) onto star(y_d), same switches
    out.facets.push_back(f);
    out.restrictions.push_back(swel(f, p.d));
  }
  return out;
}

ShellingCheck verify_shelling(const Complex& K, const std::vector<Face>& order) {
  ShellingCheck res;
  std::vector<Face> sorted = order;
  std::sort(sorted.begin(), sorted.end(), face_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != K.facets()) return res;  // not a permutation of the facets

  std::vector<Face> earlier;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Face& tau = order[idx];
    std::vector<VertexLabel> labels = tau.labels();
    const int n = (int)labels.size();
    if (n > 24) throw std::invalid_argument("facet too large to verify");

    // Intersections with earlier facets; a subset of tau is old iff it lies
    // in one of them.
    std::vector<Face> inter;
    inter.reserve(earlier.size());
    for (const Face& e : earlier) inter.push_back(tau.intersect(e));
    auto is_old = [&](const Face& f) {
      for (const Face& m : inter)
        if (f.subset_of(m)) return true;
      return false;
    };

    std::unordered_set<std::uint64_t> fresh;
    std::vector<Face> fresh_list;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Face f;
      for (int t = 0; t < n; ++t)
        if ((mask >> t) & 1u) {
          const VertexLabel& v = labels[(std::size_t)t];
          (v.neg ? f.ybits : f.xbits) |= 1u << (v.coord - 1);
        }
      if (!is_old(f)) {
        fresh.insert(f.key());
        fresh_list.push_back(f);
      }
    }

    std::vector<Face> minimal;
    for (const Face& f : fresh_list) {
      bool is_min = true;
      for (const VertexLabel& v : f.labels())
        if (fresh.count(f.without(v).key())) { is_min = false; break; }
      if (is_min) minimal.push_back(f);
    }
    std::sort(minimal.begin(), minimal.end(), face_less);

    if (minimal.size() != 1) {
      res.fail_index = idx;
      res.minimal_new_faces = std::move(minimal);
      res.restrictions.clear();
      return res;
    }
    res.restrictions.push_back(minimal.front());
    earlier.push_back(tau);
  }
  res.ok = true;
  return res;
}

BallOrSphere danaraj_klee(const Complex& K, const std::vector<Face>& order) {
  ShellingCheck chk = verify_shelling(K, order);
  if (!chk.ok || K.dim() < 0) return BallOrSphere::NotApplicable;
  std::unordered_map<std::uint64_t, int> ridge_deg;
  for (const Face& facet : K.facets())
    for (const VertexLabel& v : facet.labels())
      ++ridge_deg[facet.without(v).key()];
  bool all_two = true;
  for (const auto& [key, deg] : ridge_deg) {
    if (deg >= 3) return BallOrSphere::NotApplicable;
    if (deg == 1) all_two = false;
  }
  return all_two ? BallOrSphere::Sphere : BallOrSphere::Ball;
}

}  // namespace xpol
