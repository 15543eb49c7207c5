#pragma once

// Vertices and faces of the boundary complex C*_d of the d-dimensional
// cross-polytope, encoded as per-coordinate sign bitmasks.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace xpol {

// Coordinates are 1-based; ambient dimension d is bounded by kMaxCoord.
inline constexpr int kMaxCoord = 32;

inline std::uint32_t coord_mask(int d) {
  return d >= kMaxCoord ? 0xffffffffu : ((1u << d) - 1u);
}

struct VertexLabel {
  int coord = 1;      // 1..d
  bool neg = false;   // false: x_coord, true: y_coord

  VertexLabel antipode() const { return {coord, !neg}; }
  std::string str() const { return (neg ? "y" : "x") + std::to_string(coord); }
  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

// Parses "x3" / "y12"; throws std::invalid_argument on anything else.
VertexLabel parse_label(const std::string& token);

// A face: a vertex set with at most one of x_j / y_j per coordinate.
// Bit j-1 of xbits (resp. ybits) is set iff x_j (resp. y_j) is present.
struct Face {
  std::uint32_t xbits = 0;
  std::uint32_t ybits = 0;

  static Face of(std::initializer_list<VertexLabel> labels);
  // Throws if two labels share a coordinate.
  static Face of_labels(const std::vector<VertexLabel>& labels);

  std::uint32_t support() const { return xbits | ybits; }
  int vertex_count() const { return std::popcount(support()); }
  int dim() const { return vertex_count() - 1; }
  bool empty() const { return support() == 0; }
  bool valid() const { return (xbits & ybits) == 0; }
  bool within(int d) const { return (support() & ~coord_mask(d)) == 0; }

  bool has(VertexLabel v) const {
    std::uint32_t bit = 1u << (v.coord - 1);
    return ((v.neg ? ybits : xbits) & bit) != 0;
  }
  Face with(VertexLabel v) const;    // throws if the coordinate is taken
  Face without(VertexLabel v) const;
  Face antipode() const { return {ybits, xbits}; }

  bool subset_of(const Face& f) const {
    return (xbits & ~f.xbits) == 0 && (ybits & ~f.ybits) == 0;
  }
  Face intersect(const Face& f) const {
    return {xbits & f.xbits, ybits & f.ybits};
  }
  Face minus(const Face& f) const {
    return {xbits & ~f.xbits, ybits & ~f.ybits};
  }
  // Union of two faces; nullopt if some coordinate would carry both signs.
  static std::optional<Face> merged(const Face& a, const Face& b);

  std::vector<VertexLabel> labels() const;  // sorted by (coord, sign)
  std::string str() const;                  // "{x1, y3}"

  friend bool operator==(const Face&, const Face&) = default;
  std::uint64_t key() const { return (std::uint64_t(xbits) << 32) | ybits; }
};

// Canonical face order used wherever facet lists are sorted: lexicographic on
// the label sequence with x_j < y_j and coordinates ascending. Restricted to
// full-support facets this is the x<y word order.
bool face_less(const Face& a, const Face& b);

struct FaceHash {
  std::size_t operator()(const Face& f) const {
    return std::hash<std::uint64_t>{}(f.key());
  }
};

}  // namespace xpol
