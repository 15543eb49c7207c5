#include "xpol/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "xpol/binomial.hpp"

namespace xpol {

Complex Complex::void_complex(int ambient_d) {
  if (ambient_d < 0 || ambient_d > kMaxCoord)
    throw std::invalid_argument("ambient dimension out of range");
  Complex K;
  K.ambient_d_ = ambient_d;
  return K;
}

Complex Complex::from_facets(int ambient_d, std::vector<Face> facets) {
  if (ambient_d < 0 || ambient_d > kMaxCoord)
    throw std::invalid_argument("ambient dimension out of range");
  for (const Face& f : facets) {
    if (!f.valid()) throw std::invalid_argument("face has both signs at a coordinate");
    if (!f.within(ambient_d))
      throw std::invalid_argument("face " + f.str() + " not within ambient dimension " +
                                  std::to_string(ambient_d));
  }
  std::sort(facets.begin(), facets.end(), face_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  bool mixed = false;
  for (std::size_t k = 1; k < facets.size(); ++k)
    if (facets[k].vertex_count() != facets[0].vertex_count()) { mixed = true; break; }
  if (mixed) {
    // Drop faces contained in another (only reachable via rank selection and
    // hand-built inputs; facet lists here are small).
    std::vector<Face> keep;
    for (const Face& f : facets) {
      bool maximal = true;
      for (const Face& g : facets)
        if (f != g && f.subset_of(g)) { maximal = false; break; }
      if (maximal) keep.push_back(f);
    }
    facets = std::move(keep);
  }

  Complex K;
  K.ambient_d_ = ambient_d;
  K.facets_ = std::move(facets);
  return K;
}

int Complex::dim() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool Complex::pure() const {
  for (const Face& f : facets_)
    if (f.vertex_count() != facets_[0].vertex_count()) return false;
  return true;
}

bool Complex::is_face(const Face& f) const {
  for (const Face& g : facets_)
    if (f.subset_of(g)) return true;
  return false;
}

bool same_facets(const Complex& a, const Complex& b) {
  return a.facets() == b.facets();
}

std::size_t FaceClosure::total() const {
  std::size_t n = 0;
  for (const auto& level : by_dim) n += level.size();
  return n;
}

const std::vector<Face>& FaceClosure::of_dim(int j) const {
  static const std::vector<Face> empty;
  int idx = j + 1;
  if (idx < 0 || idx >= (int)by_dim.size()) return empty;
  return by_dim[idx];
}

bool FaceClosure::contains(const Face& f) const {
  const std::vector<Face>& level = of_dim(f.dim());
  return std::binary_search(level.begin(), level.end(), f, face_less);
}

std::size_t face_enumeration_cap() {
  const char* env = std::getenv("XPOL_MAX_FACES");
  if (env && *env) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return (std::size_t)v;
    throw std::invalid_argument("XPOL_MAX_FACES must be a positive integer");
  }
  return 531441;  // 3^12
}

FaceClosure enumerate_faces(const Complex& K) {
  FaceClosure out;
  if (K.is_void()) return out;
  const std::size_t cap = face_enumeration_cap();
  out.by_dim.resize((std::size_t)(K.dim() + 2));
  std::unordered_set<std::uint64_t> seen;
  for (const Face& facet : K.facets()) {
    std::uint32_t s = facet.support();
    std::uint32_t sub = s;
    while (true) {
      Face f{facet.xbits & sub, facet.ybits & sub};
      if (seen.insert(f.key()).second) {
        if (seen.size() > cap)
          throw std::runtime_error(
              "face enumeration exceeds cap of " + std::to_string(cap) +
              " faces (set XPOL_MAX_FACES to raise)");
        out.by_dim[(std::size_t)(f.vertex_count())].push_back(f);
      }
      if (sub == 0) break;
      sub = (sub - 1) & s;
    }
  }
  for (auto& level : out.by_dim) std::sort(level.begin(), level.end(), face_less);
  return out;
}

Complex link(const Complex& K, const Face& sigma) {
  if (!K.is_face(sigma))
    throw std::invalid_argument(sigma.str() + " is not a face of the complex");
  std::vector<Face> facets;
  for (const Face& f : K.facets())
    if (sigma.subset_of(f)) facets.push_back(f.minus(sigma));
  return Complex::from_facets(K.ambient_d(), std::move(facets));
}

Complex star(const Complex& K, const Face& sigma) {
  if (!K.is_face(sigma))
    throw std::invalid_argument(sigma.str() + " is not a face of the complex");
  std::vector<Face> facets;
  for (const Face& f : K.facets())
    if (sigma.subset_of(f)) facets.push_back(f);
  return Complex::from_facets(K.ambient_d(), std::move(facets));
}

std::vector<Face> skeleton(const Complex& K, int j) {
  if (j < -1 || j > K.dim())
    throw std::invalid_argument("skeleton dimension " + std::to_string(j) +
                                " out of range for a complex of dimension " +
                                std::to_string(K.dim()));
  FaceClosure cl = enumerate_faces(K);
  std::vector<Face> out;
  for (int t = -1; t <= j; ++t) {
    const auto& level = cl.of_dim(t);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Complex boundary_complex(const Complex& K) {
  if (K.dim() < 0)
    throw std::invalid_argument("boundary requires a complex of dimension >= 0");
  if (!K.pure()) throw std::invalid_argument("boundary requires a pure complex");
  std::unordered_map<std::uint64_t, std::pair<Face, int>> ridges;
  for (const Face& facet : K.facets()) {
    for (const VertexLabel& v : facet.labels()) {
      Face r = facet.without(v);
      auto [it, fresh] = ridges.try_emplace(r.key(), r, 0);
      if (++it->second.second >= 3)
        throw std::runtime_error("not a pseudomanifold-with-boundary: ridge " +
                                 r.str() + " lies in 3 or more facets");
    }
  }
  std::vector<Face> boundary;
  for (const auto& [key, rc] : ridges)
    if (rc.second == 1) boundary.push_back(rc.first);
  return Complex::from_facets(K.ambient_d(), std::move(boundary));
}

FVector f_vector(const Complex& K) {
  if (K.is_void()) throw std::invalid_argument("the void complex has no f-vector");
  FaceClosure cl = enumerate_faces(K);
  FVector fv;
  fv.counts.resize(cl.by_dim.size());
  for (std::size_t k = 0; k < cl.by_dim.size(); ++k)
    fv.counts[k] = (long long)cl.by_dim[k].size();
  return fv;
}

HVector h_from_f(const FVector& fv) {
  // h(x) = f(x-1) as polynomials: h_j = Σ_k (-1)^{j-k} C(D-k, j-k) f_{k-1},
  // D = dim+1.
  int D = fv.dim() + 1;
  HVector hv;
  hv.h.assign((std::size_t)D + 1, 0);
  for (int j = 0; j <= D; ++j) {
    long long acc = 0;
    for (int k = 0; k <= j; ++k) {
      long long term = binom_ll(D - k, j - k) * fv.f(k - 1);
      acc += ((j - k) % 2 == 0) ? term : -term;
    }
    hv.h[(std::size_t)j] = acc;
  }
  return hv;
}

HVector h_vector(const Complex& K) { return h_from_f(f_vector(K)); }

long long euler_char(const Complex& K) {
  if (K.is_void()) return 0;
  FVector fv = f_vector(K);
  long long chi = 0;
  for (int j = 0; j <= fv.dim(); ++j) chi += (j % 2 == 0) ? fv.f(j) : -fv.f(j);
  return chi;
}

long long reduced_euler_char(const Complex& K) {
  if (K.is_void())
    throw std::invalid_argument("reduced Euler characteristic of the void complex");
  return euler_char(K) - 1;
}

Complex rank_selected(const Complex& K, std::uint32_t S) {
  if ((S & ~coord_mask(K.ambient_d())) != 0)
    throw std::invalid_argument("coordinate selection outside ambient range");
  std::vector<Face> gens;
  gens.reserve(K.facet_count());
  for (const Face& f : K.facets()) gens.push_back({f.xbits & S, f.ybits & S});
  return Complex::from_facets(K.ambient_d(), std::move(gens));
}

long long flag_f(const Complex& K, std::uint32_t S) {
  if ((S & ~coord_mask(K.ambient_d())) != 0)
    throw std::invalid_argument("coordinate selection outside ambient range");
  if (K.is_void()) return 0;
  long long n = 0;
  FaceClosure cl = enumerate_faces(K);
  for (const Face& f : cl.of_dim(std::popcount(S) - 1))
    if (f.support() == S) ++n;
  return n;
}

long long flag_h(const Complex& K, std::uint32_t S) {
  long long chi = reduced_euler_char(rank_selected(K, S));
  return (std::popcount(S) % 2 == 0) ? -chi : chi;  // (-1)^{|S|-1} · chi
}

namespace {
// Order used for flag tables: by size, then lexicographic on sorted element
// lists (the ≺ order restricted to equal sizes).
bool subset_size_lex_less(std::uint32_t a, std::uint32_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1);
  return (a & low) != 0;
}
}  // namespace

std::vector<std::pair<std::uint32_t, long long>> flag_h_all(const Complex& K) {
  if (K.is_void()) throw std::invalid_argument("flag vector of the void complex");
  const std::uint32_t all = coord_mask(K.ambient_d());
  std::unordered_map<std::uint32_t, long long> chi;  // reduced chi of K_S
  FaceClosure cl = enumerate_faces(K);
  for (const auto& level : cl.by_dim) {
    for (const Face& f : level) {
      long long sgn = (f.vertex_count() % 2 == 0) ? -1 : 1;  // (-1)^{dim f}
      std::uint32_t free = all & ~f.support();
      std::uint32_t sub = free;
      while (true) {  // every S ⊇ support(f)
        chi[f.support() | sub] += sgn;
        if (sub == 0) break;
        sub = (sub - 1) & free;
      }
    }
  }
  std::vector<std::pair<std::uint32_t, long long>> out;
  out.reserve(chi.size());
  for (auto& [S, c] : chi) {
    long long h = (std::popcount(S) % 2 == 0) ? -c : c;
    out.push_back({S, h});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return subset_size_lex_less(a.first, b.first);
  });
  return out;
}

bool contains_skeleton(const Complex& K, int j) {
  const int d = K.ambient_d();
  if (j < 0 || j > d - 1)
    throw std::invalid_argument("skeleton dimension out of range");
  if (j + 1 > 30)
    throw std::invalid_argument("skeleton check too large to enumerate");
  // Iterate all (j+1)-subsets of coordinates (Gosper), then all sign choices.
  const std::uint32_t all = coord_mask(d);
  std::uint32_t supp = (1u << (j + 1)) - 1u;
  while (supp <= all) {
    int n = j + 1;
    std::vector<int> coords;
    coords.reserve((std::size_t)n);
    for (std::uint32_t s = supp; s; s &= s - 1)
      coords.push_back(std::countr_zero(s));
    for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
      Face f;
      for (int t = 0; t < n; ++t) {
        std::uint32_t bit = 1u << coords[(std::size_t)t];
        if ((signs >> t) & 1u) f.ybits |= bit; else f.xbits |= bit;
      }
      if (!K.is_face(f)) return false;
    }
    // Gosper's hack: next subset of the same size.
    std::uint32_t c = supp & (~supp + 1), r = supp + c;
    std::uint32_t next = (((r ^ supp) >> 2) / c) | r;
    if (r == 0 || next == supp) break;  // wrapped
    supp = next;
  }
  return true;
}

namespace {
std::vector<std::uint64_t> face_key_set(const Complex& K) {
  std::vector<std::uint64_t> keys;
  FaceClosure cl = enumerate_faces(K);
  keys.reserve(cl.total());
  for (const auto& level : cl.by_dim)
    for (const Face& f : level) keys.push_back(f.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}
}  // namespace

bool faces_equal(const Complex& a, const Complex& b) {
  return face_key_set(a) == face_key_set(b);
}

Complex intersection_complex(const Complex& a, const Complex& b) {
  std::vector<std::uint64_t> ka = face_key_set(a), kb = face_key_set(b);
  std::vector<std::uint64_t> common;
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(),
                        std::back_inserter(common));
  std::vector<Face> faces;
  faces.reserve(common.size());
  for (std::uint64_t key : common)
    faces.push_back({(std::uint32_t)(key >> 32), (std::uint32_t)key});
  return Complex::from_facets(std::max(a.ambient_d(), b.ambient_d()),
                              std::move(faces));
}

bool subcomplex_of(const Complex& inner, const Complex& outer) {
  for (const Face& f : inner.facets())
    if (!outer.is_face(f)) return false;
  return true;
}

}  // namespace xpol
