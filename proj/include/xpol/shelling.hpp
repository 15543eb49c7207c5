#pragma once

// Shelling machinery: the size-then-lexicographic order on switch sets, the
// switch-element restriction face, explicit shellings of vertex stars in
// B(i,d), a generic shelling verifier, and the Danaraj–Klee ball/sphere test.

#include <cstdint>
#include <vector>

#include "xpol/crosspoly.hpp"

namespace xpol {

// The ≺ order on subsets of [d-1] as bitmasks: first by size, then
// lexicographically on sorted element lists (the smaller set owns the least
// element of the symmetric difference). Returns <0, 0 or >0.
int prec_compare(std::uint32_t I, std::uint32_t J);

// SwEl(τ) = τ restricted to the coordinates in its switch set.
Face swel(const Face& facet, int d);

// The unique facet of C*_d containing x_d with the given switch set
// (alternating-sign filling from the top).
Face xd_facet_with_switches(std::uint32_t J, int d);

struct ShellingOrder {
  std::vector<Face> facets;
  std::vector<Face> restrictions;
};

// Facets of star(apex) in B(i,d) in ≺ order of their switch sets, with
// SwEl restrictions. apex must be x_d or y_d; requires i ≥ 0.
ShellingOrder star_shelling(const BIDParams& p, VertexLabel apex);

struct ShellingCheck {
  bool ok = false;
  std::vector<Face> restrictions;       // one per facet when ok
  std::size_t fail_index = 0;           // offending position otherwise
  std::vector<Face> minimal_new_faces;  // the minimal faces found there
};

// Checks that `order` is a permutation of K's facets in which every facet
// meets the union of its predecessors in a set of faces with a unique
// minimal element (collected by materializing the new-face set).
ShellingCheck verify_shelling(const Complex& K, const std::vector<Face>& order);

enum class BallOrSphere { Ball, Sphere, NotApplicable };

// Shellable + every ridge in ≤ 2 facets ⇒ ball or sphere (sphere iff every
// ridge lies in exactly two facets). NotApplicable if either test fails.
BallOrSphere danaraj_klee(const Complex& K, const std::vector<Face>& order);

}  // namespace xpol
