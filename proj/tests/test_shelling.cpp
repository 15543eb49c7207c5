#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "xpol/shelling.hpp"

using namespace xpol;

TEST_SUITE("shelling") {

TEST_CASE("the subset order compares size first, then smallest difference") {
  // Expected chain on subsets of {1,2,3}:
  // {} < {1} < {2} < {3} < {1,2} < {1,3} < {2,3} < {1,2,3}
  std::vector<std::uint32_t> chain{0b000, 0b001, 0b010, 0b100,
                                   0b011, 0b101, 0b110, 0b111};
  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = 0; b < chain.size(); ++b) {
      int c = prec_compare(chain[a], chain[b]);
      CHECK((a < b ? c < 0 : (a == b ? c == 0 : c > 0)));
    }
  // not the numeric mask order: {1,4} = 9 precedes {2,3} = 6
  CHECK(prec_compare(0b1001, 0b0110) < 0);
}

TEST_CASE("switch elements of a facet") {
  Face f = facet_of_word("xyyx");
  CHECK(swel(f, 4) == Face::of({{1, false}, {3, true}}));
  CHECK(swel(facet_of_word("xxxx"), 4) == Face());
  CHECK(swel(facet_of_word("xyxy"), 4) ==
        Face::of({{1, false}, {2, true}, {3, false}}));
}

TEST_CASE("facet of a prescribed switch set through the last vertex") {
  CHECK(xd_facet_with_switches(0, 4) == facet_of_word("xxxx"));
  CHECK(xd_facet_with_switches(0b001, 4) == facet_of_word("yxxx"));
  CHECK(xd_facet_with_switches(0b010, 4) == facet_of_word("yyxx"));
  CHECK(xd_facet_with_switches(0b100, 4) == facet_of_word("yyyx"));
  CHECK(xd_facet_with_switches(0b101, 4) == facet_of_word("xyyx"));
  for (std::uint32_t J = 0; J < 8; ++J) {
    Face f = xd_facet_with_switches(J, 4);
    CHECK(switch_mask(f, 4) == J);
    CHECK(f.has({4, false}));
  }
}

TEST_CASE("star shelling of B(2,4) reproduces the seven-row table") {
  ShellingOrder order = star_shelling({2, 4}, {4, false});
  REQUIRE(order.facets.size() == 7);
  std::vector<std::string> words;
  for (const Face& f : order.facets) words.push_back(word_of_facet(f, 4));
  CHECK(words == std::vector<std::string>{"xxxx", "yxxx", "yyxx", "yyyx",
                                          "xyxx", "xyyx", "xxyx"});
  std::vector<Face> expect_restr{
      Face(),
      Face::of({{1, true}}),
      Face::of({{2, true}}),
      Face::of({{3, true}}),
      Face::of({{1, false}, {2, true}}),
      Face::of({{1, false}, {3, true}}),
      Face::of({{2, false}, {3, true}})};
  CHECK(order.restrictions == expect_restr);
}

TEST_CASE("star shellings verify and their restrictions match") {
  for (int d = 1; d <= 6; ++d)
    for (int i = 0; i <= d - 1; ++i)
      for (bool neg : {false, true}) {
        VertexLabel apex{d, neg};
        ShellingOrder order = star_shelling({i, d}, apex);
        Complex st = star(build_b({i, d}), Face::of({apex}));
        Complex listed = Complex::from_facets(d, order.facets);
        CHECK(listed == st);
        ShellingCheck chk = verify_shelling(st, order.facets);
        CHECK(chk.ok);
        CHECK(chk.restrictions == order.restrictions);
        for (std::size_t t = 0; t < order.facets.size(); ++t)
          CHECK(order.restrictions[t] == swel(order.facets[t], d));
        // every vertex star misses the all-opposite facet, so it is a
        // proper subcomplex and hence a ball
        CHECK(danaraj_klee(st, order.facets) == BallOrSphere::Ball);
      }
}

TEST_CASE("restriction intervals partition the star") {
  ShellingOrder order = star_shelling({2, 4}, {4, false});
  Complex st = star(build_b({2, 4}), Face::of({{4, false}}));
  FaceClosure cl = enumerate_faces(st);
  for (const auto& level : cl.by_dim)
    for (const Face& f : level) {
      int owners = 0;
      for (std::size_t t = 0; t < order.facets.size(); ++t)
        if (order.restrictions[t].subset_of(f) &&
            f.subset_of(order.facets[t]))
          ++owners;
      CHECK(owners == 1);
    }
}

TEST_CASE("ordering the cross-polytope by sign count is a shelling") {
  for (int d = 2; d <= 5; ++d) {
    Complex K = build_b({d - 1, d});
    std::vector<Face> order(K.facets().begin(), K.facets().end());
    std::sort(order.begin(), order.end(), [&](const Face& a, const Face& b) {
      int ya = std::popcount(a.ybits), yb = std::popcount(b.ybits);
      if (ya != yb) return ya < yb;
      return a.ybits < b.ybits;
    });
    ShellingCheck chk = verify_shelling(K, order);
    CHECK(chk.ok);
    // the unique minimal new face of each facet is its set of y-vertices
    for (std::size_t t = 0; t < order.size(); ++t)
      CHECK(chk.restrictions[t] == Face{0, order[t].ybits});
    CHECK(danaraj_klee(K, order) == BallOrSphere::Sphere);
  }
}

TEST_CASE("orders that are not shellings are rejected") {
  // two disjoint triangles can never be shelled
  Complex two = build_b({0, 3});
  std::vector<Face> order(two.facets().begin(), two.facets().end());
  ShellingCheck chk = verify_shelling(two, order);
  CHECK(!chk.ok);
  CHECK(chk.fail_index == 1);
  CHECK(chk.minimal_new_faces.size() == 3);  // three isolated new vertices

  // an order that is not a permutation of the facets
  Complex oct = build_b({2, 3});
  std::vector<Face> wrong(oct.facets().begin(), oct.facets().end());
  wrong.pop_back();
  CHECK(!verify_shelling(oct, wrong).ok);
  wrong.push_back(wrong.front());
  CHECK(!verify_shelling(oct, wrong).ok);

  // a brutal mid-order jump: the octahedron facets in an order that starts
  // with two antipodal facets meets only in the empty face at step 2
  std::vector<Face> jump{facet_of_word("xxx"), facet_of_word("yyy")};
  for (const Face& f : oct.facets())
    if (f != jump[0] && f != jump[1]) jump.push_back(f);
  ShellingCheck bad = verify_shelling(oct, jump);
  CHECK(!bad.ok);
  CHECK(bad.fail_index == 1);
}

TEST_CASE("apex and parameters are validated") {
  CHECK_THROWS_AS(star_shelling({-1, 4}, {4, false}), std::invalid_argument);
  CHECK_THROWS_AS(star_shelling({1, 4}, {2, false}), std::invalid_argument);
  CHECK_THROWS_AS(xd_facet_with_switches(0b1000, 4), std::invalid_argument);
}

TEST_CASE("ball and sphere recognition on non-shellings") {
  Complex two = build_b({0, 3});
  std::vector<Face> order(two.facets().begin(), two.facets().end());
  CHECK(danaraj_klee(two, order) == BallOrSphere::NotApplicable);
}

}  // TEST_SUITE
