#include "xpol/io.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "xpol/crosspoly.hpp"

namespace xpol {

json complex_to_json(const Complex& K) {
  json out;
  out["d"] = K.ambient_d();
  out["dim"] = K.dim();
  json facets = json::array();
  for (const Face& f : K.facets()) {
    json labels = json::array();
    for (const VertexLabel& v : f.labels()) labels.push_back(v.str());
    facets.push_back(std::move(labels));
  }
  out["facets"] = std::move(facets);
  return out;
}

std::string complex_to_text(const Complex& K) {
  std::string out;
  for (const Face& f : K.facets()) {
    bool first = true;
    for (const VertexLabel& v : f.labels()) {
      if (!first) out += ' ';
      out += v.str();
      first = false;
    }
    out += '\n';
  }
  return out;
}

namespace {

Face face_from_json_entry(const json& entry, int d) {
  if (entry.is_string()) return parse_facet_line(entry.get<std::string>(), d);
  if (!entry.is_array())
    throw std::invalid_argument("facet must be an array of labels or a word");
  std::vector<VertexLabel> labels;
  for (const json& tok : entry) {
    if (!tok.is_string())
      throw std::invalid_argument("facet labels must be strings");
    labels.push_back(parse_label(tok.get<std::string>()));
  }
  return Face::of_labels(labels);
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("facets"))
    throw std::invalid_argument("expected an object with \"d\" and \"facets\"");
  int d = j.at("d").get<int>();
  if (d < 1 || d > kMaxCoord)
    throw std::invalid_argument("d out of range in complex JSON");
  std::vector<Face> facets;
  for (const json& entry : j.at("facets"))
    facets.push_back(face_from_json_entry(entry, d));
  return Complex::from_facets(d, std::move(facets));
}

Face parse_facet_line(const std::string& line, int d) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw std::invalid_argument("empty facet line");
  if (tokens.size() == 1 &&
      tokens[0].find_first_not_of("xy") == std::string::npos) {
    if (d > 0 && (int)tokens[0].size() != d)
      throw std::invalid_argument("word '" + tokens[0] + "' has length " +
                                  std::to_string(tokens[0].size()) +
                                  ", expected " + std::to_string(d));
    return facet_of_word(tokens[0]);
  }
  std::vector<VertexLabel> labels;
  for (const std::string& t : tokens) labels.push_back(parse_label(t));
  return Face::of_labels(labels);
}

std::vector<Face> facets_from_text(const std::string& text, int d_hint,
                                   int* d_out) {
  std::vector<Face> facets;
  std::istringstream in(text);
  std::string line;
  int d = d_hint;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    lines.push_back(line);
    if (d_hint == 0) {
      // Infer d: words fix it by length, labels by the largest coordinate.
      Face f = parse_facet_line(line, 0);
      std::istringstream probe(line);
      std::string first;
      probe >> first;
      std::string rest;
      bool is_word = !(probe >> rest) &&
                     first.find_first_not_of("xy") == std::string::npos;
      if (is_word) d = std::max(d, (int)first.size());
      else if (!f.empty())
        d = std::max(d, 32 - std::countl_zero(f.support()));
    }
  }
  if (d < 1 || d > kMaxCoord)
    throw std::invalid_argument("could not determine a valid d from the input");
  for (const std::string& l : lines) facets.push_back(parse_facet_line(l, d));
  if (d_out) *d_out = d;
  return facets;
}

Complex complex_from_text(const std::string& text, int d_hint) {
  int d = 0;
  std::vector<Face> facets = facets_from_text(text, d_hint, &d);
  return Complex::from_facets(d, std::move(facets));
}

json homology_to_json(const std::vector<HomologyGroup>& groups) {
  json out = json::array();
  for (const HomologyGroup& g : groups) {
    json row;
    row["degree"] = g.degree;
    row["rank"] = g.rank;
    json tor = json::array();
    for (const mpz_class& t : g.torsion) tor.push_back(t.get_str());
    row["torsion"] = std::move(tor);
    out.push_back(std::move(row));
  }
  return out;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace xpol
