#pragma once

// Simplicial complexes inside C*_d and the generic operations on them:
// face enumeration, links/stars, skeleta, boundary, f/h-vectors, rank
// selection and flag counts.

#include <cstdint>
#include <vector>

#include "xpol/face.hpp"

namespace xpol {

// A complex is stored by its inclusion-maximal faces ("facets"), sorted by
// face_less. The void complex (no faces at all) has an empty facet list; the
// complex {∅} has the single empty face as its facet. dim() reports -2 for
// the void complex and -1 for {∅}.
class Complex {
 public:
  Complex() = default;
  static Complex void_complex(int ambient_d);
  // Validates faces against ambient_d, deduplicates, drops faces contained in
  // another, and sorts.
  static Complex from_facets(int ambient_d, std::vector<Face> facets);

  int ambient_d() const { return ambient_d_; }
  int dim() const;
  bool is_void() const { return facets_.empty(); }
  bool pure() const;
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_face(const Face& f) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  int ambient_d_ = 0;
  std::vector<Face> facets_;
};

// Facet-set equality ignoring the ambient dimension (faces are absolute,
// coordinate-indexed objects, so this is meaningful across ambients).
bool same_facets(const Complex& a, const Complex& b);

// All faces grouped by dimension: by_dim[j+1] are the j-faces (sorted),
// by_dim[0] = {∅}. Empty for the void complex.
struct FaceClosure {
  std::vector<std::vector<Face>> by_dim;
  std::size_t total() const;
  const std::vector<Face>& of_dim(int j) const;  // j from -1
  bool contains(const Face& f) const;
};

// Cap on materialized faces: 3^12 by default, overridable via the
// XPOL_MAX_FACES environment variable. enumerate_faces throws when exceeded.
std::size_t face_enumeration_cap();
FaceClosure enumerate_faces(const Complex& K);

Complex link(const Complex& K, const Face& sigma);   // throws if sigma ∉ K
Complex star(const Complex& K, const Face& sigma);   // throws if sigma ∉ K
// All faces of dimension ≤ j (including ∅), sorted by (dim, face_less);
// requires -1 ≤ j ≤ dim K.
std::vector<Face> skeleton(const Complex& K, int j);
// Subcomplex generated by the ridges lying in exactly one facet. Throws if
// some ridge lies in three or more facets. Void result for closed complexes.
Complex boundary_complex(const Complex& K);

struct FVector {
  std::vector<long long> counts;  // counts[j+1] = f_j, counts[0] = f_{-1} = 1
  long long f(int j) const {
    int idx = j + 1;
    return (idx < 0 || idx >= (int)counts.size()) ? 0 : counts[idx];
  }
  int dim() const { return (int)counts.size() - 2; }
};

struct HVector {
  std::vector<long long> h;  // h[0..dim+1]
};

FVector f_vector(const Complex& K);        // throws on the void complex
HVector h_from_f(const FVector& fv);       // exact shift h(x) = f(x-1)
HVector h_vector(const Complex& K);

long long euler_char(const Complex& K);          // Σ_{j≥0} (-1)^j f_j
long long reduced_euler_char(const Complex& K);  // Σ_{j≥-1} (-1)^j f_j

// Faces supported on coordinates in S (bitmask over [d]); possibly non-pure.
Complex rank_selected(const Complex& K, std::uint32_t S);
// flag_f(K,S) = number of faces with support exactly S.
long long flag_f(const Complex& K, std::uint32_t S);
// flag_h(K,S) = (-1)^{|S|-1} · reduced Euler characteristic of K_S.
long long flag_h(const Complex& K, std::uint32_t S);
// All flag_h values at once (single pass over the closure), sorted by
// (|S|, lexicographic-on-elements).
std::vector<std::pair<std::uint32_t, long long>> flag_h_all(const Complex& K);

// Does K contain every j-face of C*_d (d = ambient)? Requires 0 ≤ j ≤ d-1.
bool contains_skeleton(const Complex& K, int j);

// Face-set equality / intersection / containment via closures.
bool faces_equal(const Complex& a, const Complex& b);
Complex intersection_complex(const Complex& a, const Complex& b);
bool subcomplex_of(const Complex& inner, const Complex& outer);

}  // namespace xpol
