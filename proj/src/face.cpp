#include "xpol/face.hpp"

#include <stdexcept>

namespace xpol {

VertexLabel parse_label(const std::string& token) {
  if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y'))
    throw std::invalid_argument("bad vertex label: '" + token + "'");
  int coord = 0;
  for (std::size_t k = 1; k < token.size(); ++k) {
    char c = token[k];
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad vertex label: '" + token + "'");
    coord = coord * 10 + (c - '0');
    if (coord > kMaxCoord)
      throw std::invalid_argument("coordinate out of range: '" + token + "'");
  }
  if (coord < 1)
    throw std::invalid_argument("coordinate out of range: '" + token + "'");
  return {coord, token[0] == 'y'};
}

Face Face::of(std::initializer_list<VertexLabel> labels) {
  return of_labels(std::vector<VertexLabel>(labels));
}

Face Face::of_labels(const std::vector<VertexLabel>& labels) {
  Face f;
  for (const VertexLabel& v : labels) {
    if (v.coord < 1 || v.coord > kMaxCoord)
      throw std::invalid_argument("coordinate out of range");
    std::uint32_t bit = 1u << (v.coord - 1);
    if (f.support() & bit)
      throw std::invalid_argument("coordinate " + std::to_string(v.coord) +
                                  " used twice in face");
    (v.neg ? f.ybits : f.xbits) |= bit;
  }
  return f;
}

Face Face::with(VertexLabel v) const {
  std::uint32_t bit = 1u << (v.coord - 1);
  if (support() & bit)
    throw std::invalid_argument("coordinate " + std::to_string(v.coord) +
                                " already used in face");
  Face f = *this;
  (v.neg ? f.ybits : f.xbits) |= bit;
  return f;
}

Face Face::without(VertexLabel v) const {
  std::uint32_t bit = 1u << (v.coord - 1);
  Face f = *this;
  (v.neg ? f.ybits : f.xbits) &= ~bit;
  return f;
}

std::optional<Face> Face::merged(const Face& a, const Face& b) {
  Face f{a.xbits | b.xbits, a.ybits | b.ybits};
  if (!f.valid()) return std::nullopt;
  return f;
}

std::vector<VertexLabel> Face::labels() const {
  std::vector<VertexLabel> out;
  out.reserve(vertex_count());
  std::uint32_t s = support();
  while (s) {
    int j = std::countr_zero(s);
    out.push_back({j + 1, ((ybits >> j) & 1u) != 0});
    s &= s - 1;
  }
  return out;
}

std::string Face::str() const {
  std::string out = "{";
  bool first = true;
  for (const VertexLabel& v : labels()) {
    if (!first) out += ", ";
    out += v.str();
    first = false;
  }
  return out + "}";
}

bool face_less(const Face& a, const Face& b) {
  std::uint32_t sa = a.support(), sb = b.support();
  while (sa && sb) {
    int ca = std::countr_zero(sa), cb = std::countr_zero(sb);
    if (ca != cb) return ca < cb;
    bool na = ((a.ybits >> ca) & 1u) != 0, nb = ((b.ybits >> cb) & 1u) != 0;
    if (na != nb) return nb;  // x before y
    sa &= sa - 1;
    sb &= sb - 1;
  }
  return sb != 0;  // proper prefix first
}

}  // namespace xpol
