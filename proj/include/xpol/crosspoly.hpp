#pragma once

// The B(i,d) family: facets of C*_d as sign words, switch sets, the filling
// operation behind the O(d) membership test, and construction of B(i,d), its
// complementary subcomplex and its boundary.

#include <cstdint>
#include <string>
#include <vector>

#include "xpol/complex.hpp"

namespace xpol {

struct BIDParams {
  int i = 0;
  int d = 1;
};

// Requires 1 ≤ d ≤ kMaxCoord and -1 ≤ i ≤ d-1; throws otherwise.
void validate(const BIDParams& p);

// Facet <-> word bijection: letter j of the word is 'x' iff x_j is in the
// facet. Requires a full-support facet.
std::string word_of_facet(const Face& facet, int d);
Face facet_of_word(const std::string& word);

// Switch positions of a facet: bit j-1 is set iff letters j and j+1 of its
// word differ (j ∈ [d-1]).
std::uint32_t switch_mask(const Face& facet, int d);
int switch_count(const Face& facet, int d);
std::vector<int> mask_elements(std::uint32_t mask);  // sorted, 1-based

// The filling of a face: every unspecified coordinate copies the sign of the
// next specified coordinate above it; trailing coordinates copy the highest
// specified one; fill(∅, d) is the all-x facet.
Face fill(const Face& sigma, int d);

// σ ∈ B(i,d) iff the filling of σ has at most i switches.
bool is_face_of_b(const Face& sigma, const BIDParams& p);

// Number of facets of B(i,d): 2·Σ_{k≤i} C(d-1,k).
long long b_facet_count_formula(const BIDParams& p);

Complex build_b(const BIDParams& p);           // facets with ≤ i switches
Complex build_complement(const BIDParams& p);  // facets with ≥ i+1 switches
// boundary_complex(build_b(p)); requires 0 ≤ i ≤ d-2 (closed otherwise).
Complex build_boundary(const BIDParams& p);

// The involution swapping x_j and y_j at even coordinates; it complements
// switch sets and maps B(d-i-2,d) onto build_complement({i,d}).
Face complement_involution(const Face& f);
Complex complement_involution(const Complex& K);

}  // namespace xpol
