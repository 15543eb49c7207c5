#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "xpol/crosspoly.hpp"
#include "xpol/io.hpp"

using namespace xpol;

TEST_SUITE("io") {

TEST_CASE("json round trip") {
  Complex K = build_b({1, 4});
  json j = complex_to_json(K);
  CHECK(j["d"] == 4);
  CHECK(j["dim"] == 3);
  CHECK(j["facets"].size() == 8);
  Complex back = complex_from_json(j);
  CHECK(back == K);

  // the void complex and {∅} serialize distinctly
  json v = complex_to_json(Complex::void_complex(3));
  CHECK(v["dim"] == -2);
  CHECK(v["facets"].empty());
  CHECK(complex_from_json(v).is_void());

  json e = complex_to_json(Complex::from_facets(3, {Face()}));
  CHECK(e["dim"] == -1);
  REQUIRE(e["facets"].size() == 1);
  CHECK(e["facets"][0].empty());
  Complex eb = complex_from_json(e);
  CHECK(!eb.is_void());
  CHECK(eb.dim() == -1);
}

TEST_CASE("json accepts words for facets and recomputes dim") {
  json j;
  j["d"] = 3;
  j["dim"] = 77;  // ignored
  j["facets"] = json::array({json::array({"x1", "y2", "x3"}), "yyy"});
  Complex K = complex_from_json(j);
  CHECK(K.dim() == 2);
  CHECK(K.facet_count() == 2);
  CHECK(K.is_face(facet_of_word("yyy")));

  json bad = j;
  bad["facets"] = json::array({json::array({"x1", "x1"})});
  CHECK_THROWS_AS(complex_from_json(bad), std::invalid_argument);
  json nod;
  nod["facets"] = json::array();
  CHECK_THROWS_AS(complex_from_json(nod), std::invalid_argument);
}

TEST_CASE("text serialization is sorted and stable") {
  Complex K = build_b({0, 3});
  CHECK(complex_to_text(K) == "x1 x2 x3\ny1 y2 y3\n");
  CHECK(complex_to_text(Complex::void_complex(3)) == "");
  // {∅} prints a single empty line to keep one facet per line
  CHECK(complex_to_text(Complex::from_facets(3, {Face()})) == "\n");
}

TEST_CASE("text parsing accepts labels, words, comments and blanks") {
  int d = 0;
  std::vector<Face> fs = facets_from_text("x1 x2 x3\n\nyyy\n# done\n", 0, &d);
  CHECK(d == 3);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == facet_of_word("xxx"));
  CHECK(fs[1] == facet_of_word("yyy"));

  // order in the file is preserved even against face order
  std::vector<Face> rev = facets_from_text("yyy\nxxx\n", 3, &d);
  CHECK(rev[0] == facet_of_word("yyy"));

  // d is inferred from labels when no word appears
  std::vector<Face> lab = facets_from_text("x2 y5\n", 0, &d);
  CHECK(d == 5);
  CHECK(lab[0] == Face::of({{2, false}, {5, true}}));

  Complex K = complex_from_text("xxx\nyyy\n");
  CHECK(K == build_b({0, 3}));

  CHECK_THROWS_AS(facets_from_text("xy\nxyx\n", 0, &d),
                  std::invalid_argument);  // inconsistent word lengths
  CHECK_THROWS_AS(facets_from_text("xq\n", 0, &d), std::invalid_argument);
  CHECK_THROWS_AS(facets_from_text("xx\n", 3, &d),
                  std::invalid_argument);  // word length vs supplied d
}

TEST_CASE("single facet lines") {
  CHECK(parse_facet_line("x1 y3", 4) == Face::of({{1, false}, {3, true}}));
  CHECK(parse_facet_line("xyxy", 4) == facet_of_word("xyxy"));
  CHECK_THROWS_AS(parse_facet_line("", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_facet_line("xyx", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_facet_line("x1 x1", 4), std::invalid_argument);
}

TEST_CASE("homology groups serialize with torsion strings") {
  std::vector<HomologyGroup> h{{0, 0, {}}, {1, 2, {mpz_class(2), mpz_class(4)}}};
  json j = homology_to_json(h);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["degree"] == 0);
  CHECK(j[0]["rank"] == 0);
  CHECK(j[0]["torsion"].empty());
  CHECK(j[1]["rank"] == 2);
  CHECK(j[1]["torsion"][0] == "2");
  CHECK(j[1]["torsion"][1] == "4");
}

TEST_CASE("rationals print in lowest terms") {
  CHECK(rational_str(mpq_class(20)) == "20");
  CHECK(rational_str(mpq_class(-5, 16)) == "-5/16");
  mpq_class q(4, 8);
  q.canonicalize();
  CHECK(rational_str(q) == "1/2");
}

}  // TEST_SUITE
