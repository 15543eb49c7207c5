#include "xpol/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace xpol {

int label_index(VertexLabel v, int d) {
  if (v.coord < 1 || v.coord > d) throw std::invalid_argument("label out of range");
  return (v.neg ? d : 0) + v.coord - 1;
}

VertexLabel label_at(int index, int d) {
  if (index < 0 || index >= 2 * d) throw std::invalid_argument("label index out of range");
  return {index % d + 1, index >= d};
}

VertexPermutation VertexPermutation::identity(int d) {
  if (d < 1 || d > kMaxCoord) throw std::invalid_argument("d out of range");
  VertexPermutation p;
  p.d_ = d;
  p.img_.resize((std::size_t)(2 * d));
  for (int k = 0; k < 2 * d; ++k) p.img_[(std::size_t)k] = (std::uint8_t)k;
  return p;
}

VertexPermutation VertexPermutation::generator(Generator g, int d) {
  VertexPermutation p = identity(d);
  auto set = [&](VertexLabel from, VertexLabel to) {
    p.img_[(std::size_t)label_index(from, d)] = (std::uint8_t)label_index(to, d);
  };
  for (int j = 1; j <= d; ++j) {
    switch (g) {
      case Generator::D:
        set({j, false}, {j, true});
        set({j, true}, {j, false});
        break;
      case Generator::E:
        set({j, false}, {d - j + 1, false});
        set({j, true}, {d - j + 1, true});
        break;
      case Generator::R:
        set({j, false}, {j % d + 1, false});
        set({j, true}, {j % d + 1, true});
        break;
      case Generator::Rprime:
        if (j < d) {
          set({j, false}, {j + 1, false});
          set({j, true}, {j + 1, true});
        } else {
          set({d, false}, {1, true});
          set({d, true}, {1, false});
        }
        break;
    }
  }
  return p;
}

VertexPermutation VertexPermutation::from_images(int d, std::vector<std::uint8_t> images) {
  if (d < 1 || d > kMaxCoord) throw std::invalid_argument("d out of range");
  if ((int)images.size() != 2 * d)
    throw std::invalid_argument("permutation image list must have 2d entries");
  std::vector<bool> hit((std::size_t)(2 * d), false);
  for (std::uint8_t v : images) {
    if (v >= 2 * d || hit[v]) throw std::invalid_argument("not a bijection of the labels");
    hit[v] = true;
  }
  VertexPermutation p;
  p.d_ = d;
  p.img_ = std::move(images);
  return p;
}

VertexLabel VertexPermutation::operator()(VertexLabel v) const {
  return label_at(img_[(std::size_t)label_index(v, d_)], d_);
}

Face VertexPermutation::operator()(const Face& f) const {
  Face out;
  for (const VertexLabel& v : f.labels()) {
    VertexLabel w = (*this)(v);
    std::uint32_t bit = 1u << (w.coord - 1);
    if (out.support() & bit)
      throw std::invalid_argument("permutation image of " + f.str() +
                                  " is not a face");
    (w.neg ? out.ybits : out.xbits) |= bit;
  }
  return out;
}

VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("permutation dimension mismatch");
  VertexPermutation p;
  p.d_ = a.d_;
  p.img_.resize(b.img_.size());
  for (std::size_t k = 0; k < b.img_.size(); ++k) p.img_[k] = a.img_[b.img_[k]];
  return p;
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation p;
  p.d_ = d_;
  p.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) p.img_[img_[k]] = (std::uint8_t)k;
  return p;
}

bool VertexPermutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != k) return false;
  return true;
}

Complex apply(const VertexPermutation& pi, const Complex& K) {
  std::vector<Face> facets;
  facets.reserve(K.facet_count());
  for (const Face& f : K.facets()) facets.push_back(pi(f));
  return Complex::from_facets(K.ambient_d(), std::move(facets));
}

bool is_centrally_symmetric(const Complex& K) {
  if (K.is_void()) return false;
  VertexPermutation D = VertexPermutation::generator(Generator::D, K.ambient_d());
  if (apply(D, K) != K) return false;
  FaceClosure cl = enumerate_faces(K);
  for (const auto& level : cl.by_dim) {
    for (const Face& f : level) {
      if (f.empty()) continue;
      Face g = f.antipode();
      if (g == f || !f.intersect(g).empty()) return false;
    }
  }
  return true;
}

namespace {

VertexPermutation named_or_null(
    const std::vector<std::pair<std::string, VertexPermutation>>& gens,
    const std::string& name, bool& found) {
  for (const auto& [n, p] : gens)
    if (n == name) { found = true; return p; }
  found = false;
  return gens.empty() ? VertexPermutation() : gens.front().second;
}

VertexPermutation power(VertexPermutation p, int n) {
  VertexPermutation acc = VertexPermutation::identity(p.d());
  for (int k = 0; k < n; ++k) acc = p * acc;
  return acc;
}

}  // namespace

GroupReport group_closure(
    const std::vector<std::pair<std::string, VertexPermutation>>& gens,
    const Complex* preserve, std::size_t max_order) {
  if (gens.empty()) throw std::invalid_argument("no generators supplied");
  const int d = gens.front().second.d();
  for (const auto& [name, p] : gens)
    if (p.d() != d) throw std::invalid_argument("generator dimension mismatch");
  if (max_order == 0) max_order = 10 * 4 * (std::size_t)d;

  GroupReport rep;

  // BFS closure under right-multiplication by the generators.
  std::map<std::vector<std::uint8_t>, bool> seen;
  std::vector<VertexPermutation> frontier{VertexPermutation::identity(d)};
  seen[frontier.front().images()] = true;
  while (!frontier.empty()) {
    std::vector<VertexPermutation> next;
    for (const VertexPermutation& g : frontier) {
      for (const auto& [name, h] : gens) {
        VertexPermutation gh = g * h;
        if (seen.emplace(gh.images(), true).second) {
          if (seen.size() > max_order)
            throw std::runtime_error(
                "group closure exceeded the bound of " + std::to_string(max_order) +
                " elements");
          next.push_back(std::move(gh));
        }
      }
    }
    frontier = std::move(next);
  }
  rep.order = seen.size();

  // Orbit of x_1 under the generators (and their inverses, for safety).
  std::vector<bool> orbit((std::size_t)(2 * d), false);
  std::vector<int> stack{label_index({1, false}, d)};
  orbit[(std::size_t)stack[0]] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [name, p] : gens) {
      for (const VertexPermutation& q : {p, p.inverse()}) {
        int w = label_index(q(label_at(v, d)), d);
        if (!orbit[(std::size_t)w]) {
          orbit[(std::size_t)w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  rep.vertex_transitive =
      std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });

  // Relations among the named generators, where present.
  bool hasD = false, hasE = false, hasR = false, hasRp = false;
  VertexPermutation D = named_or_null(gens, "D", hasD);
  VertexPermutation E = named_or_null(gens, "E", hasE);
  VertexPermutation R = named_or_null(gens, "R", hasR);
  VertexPermutation Rp = named_or_null(gens, "R'", hasRp);
  VertexPermutation antipodal = VertexPermutation::generator(Generator::D, d);
  auto check = [&](const std::string& name, bool ok) {
    rep.relations_checked.push_back(name + (ok ? " ok" : " FAILED"));
    if (!ok) rep.relations_ok = false;
  };
  if (hasD) check("D^2 = id", (D * D).is_identity());
  if (hasE) check("E^2 = id", (E * E).is_identity());
  if (hasR) check("R^d = id", power(R, d).is_identity());
  if (hasE && hasR) check("E R E = R^-1", E * R * E == R.inverse());
  if (hasD && hasE) check("D E = E D", D * E == E * D);
  if (hasD && hasR) check("D R = R D", D * R == R * D);
  if (hasE && hasRp) check("E R' E = R'^-1", E * Rp * E == Rp.inverse());
  if (hasRp) check("R'^d = antipodal", power(Rp, d) == antipodal);
  if (hasRp) check("R'^2d = id", power(Rp, 2 * d).is_identity());

  if (preserve) {
    for (const auto& [name, p] : gens)
      if (apply(p, *preserve) != *preserve) { rep.preserves_complex = false; break; }
  }
  return rep;
}

}  // namespace xpol
