#pragma once

// Serialization: facet-list JSON ({"d": ..., "dim": ..., "facets": [[...]]}),
// the plain-text facet-per-line format, and parsers accepting either label
// lists ("x1 y2") or whole words ("xyx").

#include <json.hpp>

#include <string>
#include <vector>

#include "xpol/complex.hpp"
#include "xpol/homology.hpp"

namespace xpol {

using json = nlohmann::ordered_json;

json complex_to_json(const Complex& K);
std::string complex_to_text(const Complex& K);

// Accepts {"d": int, "facets": [...]} where each facet is an array of label
// strings or a single word string; "dim" is recomputed, not trusted.
Complex complex_from_json(const json& j);

// One facet per line: space-separated labels, or a single word. Blank lines
// and lines starting with '#' are skipped. d is inferred from the content
// when d_hint is 0. Facet order in the file is preserved.
std::vector<Face> facets_from_text(const std::string& text, int d_hint,
                                   int* d_out);
Complex complex_from_text(const std::string& text, int d_hint = 0);

// A single facet line (labels or word form).
Face parse_facet_line(const std::string& line, int d);

json homology_to_json(const std::vector<HomologyGroup>& groups);

// Exact rational as a string: "20", "-5/16".
std::string rational_str(const mpq_class& q);

}  // namespace xpol
