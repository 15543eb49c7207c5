#pragma once

// Vertex permutations of C*_d, the dihedral-type generators acting on the
// B(i,d) family, and group closure with transitivity/relation reporting.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xpol/complex.hpp"

namespace xpol {

enum class Generator { D, E, R, Rprime };

// A bijection of the 2d vertex labels, indexed x_j -> j-1, y_j -> d+j-1.
class VertexPermutation {
 public:
  static VertexPermutation identity(int d);
  static VertexPermutation generator(Generator g, int d);
  // images[k] = index of the image of label k; must be a bijection.
  static VertexPermutation from_images(int d, std::vector<std::uint8_t> images);

  int d() const { return d_; }
  VertexLabel operator()(VertexLabel v) const;
  Face operator()(const Face& f) const;  // throws if the image is not a face

  // (a * b)(v) = a(b(v))
  friend VertexPermutation operator*(const VertexPermutation& a,
                                     const VertexPermutation& b);
  VertexPermutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  const std::vector<std::uint8_t>& images() const { return img_; }

 private:
  int d_ = 0;
  std::vector<std::uint8_t> img_;
};

int label_index(VertexLabel v, int d);
VertexLabel label_at(int index, int d);

// Facet-wise image of a complex under a vertex permutation.
Complex apply(const VertexPermutation& pi, const Complex& K);

// The antipodal map x_j <-> y_j preserves K, and every nonempty face is
// disjoint from (and different from) its antipode.
bool is_centrally_symmetric(const Complex& K);

struct GroupReport {
  std::size_t order = 0;
  bool vertex_transitive = false;
  bool relations_ok = true;
  bool preserves_complex = true;
  std::vector<std::string> relations_checked;
};

// Closes the named generators under composition (BFS). Throws if the closure
// exceeds max_order (default 10·4d). Relations are checked for generators
// named "D", "E", "R", "R'" when present; preserves_complex is evaluated when
// a complex is supplied.
GroupReport group_closure(
    const std::vector<std::pair<std::string, VertexPermutation>>& gens,
    const Complex* preserve = nullptr, std::size_t max_order = 0);

}  // namespace xpol
