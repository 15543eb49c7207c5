#include "xpol/verify.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>
#include <unordered_map>

#include "xpol/binomial.hpp"
#include "xpol/enumeration.hpp"
#include "xpol/homology.hpp"
#include "xpol/shelling.hpp"
#include "xpol/symmetry.hpp"

namespace xpol {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

void add(SuiteResult& out, const std::string& id, bool pass,
         const std::string& detail = "") {
  out.checks.push_back({id, pass, detail});
}

// ---- counting ----

void suite_counting(SuiteResult& out, const BIDParams& p) {
  Complex B = build_b(p);
  long long expect = b_facet_count_formula(p);
  add(out, "facet-count-formula", (long long)B.facet_count() == expect,
      "got " + std::to_string(B.facet_count()) + ", formula " +
          std::to_string(expect));
  long long special = -1;
  if (p.i == -1) special = 0;
  else if (p.i == 0) special = 2;
  else if (p.i == 1) special = 2 * p.d;
  else if (p.i == p.d - 2) special = (1LL << p.d) - 2;
  if (p.i == p.d - 1) special = 1LL << p.d;
  if (special >= 0)
    add(out, "facet-count-special-case",
        (long long)B.facet_count() == special,
        "expected " + std::to_string(special));
  Complex C = build_complement(p);
  add(out, "complement-count",
      (long long)(B.facet_count() + C.facet_count()) == (1LL << p.d),
      "B and its complement partition the 2^d facets");
}

// ---- membership ----

// Minimal switch count over all facets containing sigma, by enumeration.
int brute_min_switches(const Face& sigma, int d) {
  int best = d;  // switch counts are at most d-1
  for (std::uint32_t w = 0; w < (1u << d); ++w) {
    Face facet{~w & coord_mask(d), w};
    if (sigma.subset_of(facet))
      best = std::min(best, switch_count(facet, d));
  }
  return best;
}

void suite_membership(SuiteResult& out, const BIDParams& p) {
  if (p.d > 12) {
    add(out, "membership-matches-brute-force", false, "d too large to enumerate");
    return;
  }
  bool match = true, minimal = true;
  std::string bad;
  // All faces of C*_d: one of {absent, x, y} per coordinate.
  std::vector<Face> stack{Face{}};
  std::vector<Face> all;
  for (int j = 0; j < p.d; ++j) {
    all.clear();
    for (const Face& f : stack) {
      std::uint32_t bit = 1u << j;
      all.push_back(f);
      all.push_back({f.xbits | bit, f.ybits});
      all.push_back({f.xbits, f.ybits | bit});
    }
    stack = all;
  }
  for (const Face& f : stack) {
    int brute = brute_min_switches(f, p.d);
    int from_fill = switch_count(fill(f, p.d), p.d);
    if (from_fill != brute) {
      minimal = false;
      if (bad.empty()) bad = f.str();
    }
    bool fast = is_face_of_b(f, p);
    if (fast != (p.i >= 0 && brute <= p.i)) {
      match = false;
      if (bad.empty()) bad = f.str();
    }
  }
  add(out, "membership-matches-brute-force", match, bad);
  add(out, "fill-minimizes-switches", minimal, bad);
}

// ---- skeleton ----

void suite_skeleton(SuiteResult& out, const BIDParams& p) {
  Complex B = build_b(p);
  add(out, "b-contains-i-skeleton", contains_skeleton(B, p.i),
      "every " + std::to_string(p.i) + "-face of the ambient complex");
  if (p.i <= p.d - 2) {
    int j = std::min(p.i, p.d - p.i - 2);
    add(out, "boundary-contains-min-skeleton",
        contains_skeleton(build_boundary(p), j),
        "skeleton dimension " + std::to_string(j));
  }
}

// ---- symmetry ----

long long expected_even_family_order(int d) {
  if (d == 1) return 2;  // E and R act trivially
  if (d == 2) return 4;  // R coincides with E
  return 4LL * d;
}

void suite_symmetry(SuiteResult& out, const BIDParams& p) {
  const int d = p.d;
  Complex B = build_b(p);
  VertexPermutation D = VertexPermutation::generator(Generator::D, d);
  VertexPermutation E = VertexPermutation::generator(Generator::E, d);
  VertexPermutation R = VertexPermutation::generator(Generator::R, d);
  VertexPermutation Rp = VertexPermutation::generator(Generator::Rprime, d);

  add(out, "antipodal-preserves-b", apply(D, B) == B);
  add(out, "reversal-preserves-b", apply(E, B) == B);
  const bool even = p.i % 2 == 0;
  add(out, even ? "rotation-preserves-b" : "signed-rotation-preserves-b",
      apply(even ? R : Rp, B) == B);
  add(out, "b-centrally-symmetric", is_centrally_symmetric(B));

  std::vector<std::pair<std::string, VertexPermutation>> gens;
  long long expect;
  if (even) {
    gens = {{"D", D}, {"E", E}, {"R", R}};
    expect = expected_even_family_order(d);
  } else {
    gens = {{"E", E}, {"R'", Rp}};
    expect = 4LL * d;
  }
  GroupReport rep = group_closure(gens, &B);
  add(out, "group-order", (long long)rep.order == expect,
      "order " + std::to_string(rep.order) + ", expected " +
          std::to_string(expect));
  add(out, "group-vertex-transitive", rep.vertex_transitive);
  add(out, "group-relations", rep.relations_ok);
  add(out, "group-preserves-b", rep.preserves_complex);

  if (p.i <= p.d - 2) {
    Complex dB = build_boundary(p);
    add(out, "boundary-centrally-symmetric", is_centrally_symmetric(dB));
    add(out, "symmetries-preserve-boundary",
        apply(D, dB) == dB && apply(E, dB) == dB &&
            apply(even ? R : Rp, dB) == dB);
  }
}

// ---- complement ----

void suite_complement(SuiteResult& out, const BIDParams& p) {
  Complex B = build_b(p);
  Complex C = build_complement(p);
  add(out, "facet-counts-sum",
      (long long)(B.facet_count() + C.facet_count()) == (1LL << p.d));

  Complex mirror = build_b({p.d - p.i - 2, p.d});
  add(out, "involution-maps-mirror-onto-complement",
      complement_involution(mirror) == C,
      "A(B(d-i-2,d)) against the complement of B(i,d)");

  bool involutive = true, complements = true;
  for (const Face& f : B.facets()) {
    if (complement_involution(complement_involution(f)) != f) involutive = false;
    if (p.d >= 2) {
      std::uint32_t sw = switch_mask(f, p.d);
      std::uint32_t sw2 = switch_mask(complement_involution(f), p.d);
      if (sw2 != (~sw & coord_mask(p.d - 1))) complements = false;
    }
  }
  add(out, "involution-is-involution", involutive);
  add(out, "involution-complements-switch-sets", complements);

  if (p.i >= 0) {
    Complex prev = build_b({p.i - 1, p.d});
    bool nested = true;
    for (const Face& f : prev.facets())
      if (!B.is_face(f)) { nested = false; break; }
    add(out, "b-nested-in-previous", nested, "B(i-1,d) inside B(i,d)");
  }
}

// ---- shelling ----

void suite_shelling(SuiteResult& out, const BIDParams& p) {
  for (bool neg : {false, true}) {
    VertexLabel apex{p.d, neg};
    std::string tag = neg ? "-yd" : "-xd";
    ShellingOrder ord = star_shelling(p, apex);
    Complex st = star(build_b(p), Face::of({apex}));
    add(out, "star-order-is-star" + tag,
        Complex::from_facets(p.d, ord.facets) == st,
        "shelling order lists exactly the star's facets");
    ShellingCheck chk = verify_shelling(st, ord.facets);
    add(out, "star-shelling-valid" + tag, chk.ok,
        chk.ok ? "" : "fails at position " + std::to_string(chk.fail_index));
    add(out, "restrictions-are-switch-elements" + tag,
        chk.ok && chk.restrictions == ord.restrictions);
    add(out, "danaraj-klee-ball" + tag,
        danaraj_klee(st, ord.facets) == BallOrSphere::Ball);

    if (chk.ok && p.d <= 8) {
      // The intervals [restriction, facet] partition the star's faces.
      bool partition = true;
      FaceClosure cl = enumerate_faces(st);
      for (const auto& level : cl.by_dim) {
        for (const Face& f : level) {
          int owners = 0;
          for (std::size_t t = 0; t < ord.facets.size(); ++t)
            if (ord.restrictions[t].subset_of(f) &&
                f.subset_of(ord.facets[t]))
              ++owners;
          if (owners != 1) { partition = false; break; }
        }
        if (!partition) break;
      }
      add(out, "interval-partition" + tag, partition);
    }
  }

  // Switch sets biject star(x_d) facets with subsets of [d-1], inverted by
  // the alternating filling.
  bool biject = true;
  Complex full_star = star(build_b({p.d - 1, p.d}), Face::of({{p.d, false}}));
  std::vector<std::uint32_t> seen;
  for (const Face& f : full_star.facets()) {
    std::uint32_t J = switch_mask(f, p.d);
    if (xd_facet_with_switches(J, p.d) != f) biject = false;
    seen.push_back(J);
  }
  std::sort(seen.begin(), seen.end());
  if (std::unique(seen.begin(), seen.end()) != seen.end() ||
      seen.size() != (std::size_t)1 << (p.d - 1))
    biject = false;
  add(out, "switch-set-bijection", biject);
}

// ---- manifold ----

void manifold_level(SuiteResult& out, int t, int dt, const std::string& tag) {
  Complex Bt = build_b({t, dt});
  for (bool neg : {false, true}) {
    ShellingOrder ord = star_shelling({t, dt}, {dt, neg});
    Complex st = star(Bt, Face::of({{dt, neg}}));
    add(out, std::string("star-is-shellable-ball") + (neg ? "-yd" : "-xd") + tag,
        danaraj_klee(st, ord.facets) == BallOrSphere::Ball);
  }
  if (t >= 1) {
    Complex inter = intersection_complex(link(Bt, Face::of({{dt, false}})),
                                         link(Bt, Face::of({{dt, true}})));
    add(out, "links-intersection-recursion" + tag,
        faces_equal(inter, build_b({t - 1, dt - 1})),
        "link(x_d) ∩ link(y_d) against B(i-1,d-1)");
  }
}

void suite_manifold(SuiteResult& out, const BIDParams& p, const Complex* supplied) {
  Complex B = build_b(p);
  const Complex& K = supplied ? *supplied : B;

  // Ridge degrees of the complex under test.
  bool at_most_two = true;
  std::string offender;
  {
    std::unordered_map<std::uint64_t, std::pair<Face, int>> deg;
    for (const Face& facet : K.facets())
      for (const VertexLabel& v : facet.labels()) {
        Face r = facet.without(v);
        auto [it, fresh] = deg.try_emplace(r.key(), r, 0);
        if (++it->second.second > 2 && offender.empty()) {
          at_most_two = false;
          offender = r.str();
        }
      }
  }
  add(out, "ridges-in-at-most-two-facets", at_most_two, offender);

  if (supplied) {
    bool same = *supplied == B;
    std::string detail;
    if (!same) {
      for (const Face& f : B.facets())
        if (!std::binary_search(supplied->facets().begin(),
                                supplied->facets().end(), f,
                                face_less)) {
          detail = "missing facet " + f.str();
          break;
        }
      if (detail.empty()) detail = "extra facets beyond B(i,d)";
    }
    add(out, "facets-match-reference", same, detail);
  }

  if (p.i <= p.d - 2) {
    Complex dK = at_most_two ? boundary_complex(K) : Complex::void_complex(p.d);
    Complex dB = build_boundary(p);
    if (supplied) {
      bool same = dK == dB;
      std::string detail;
      if (!same) {
        for (const Face& f : dK.facets())
          if (!std::binary_search(dB.facets().begin(), dB.facets().end(), f,
                                  face_less)) {
            detail = "offending ridge " + f.str();
            break;
          }
        if (detail.empty())
          for (const Face& f : dB.facets())
            if (!std::binary_search(dK.facets().begin(), dK.facets().end(), f,
                                    face_less)) {
              detail = "offending ridge " + f.str() + " (absent)";
              break;
            }
      }
      add(out, "boundary-matches-reference", at_most_two && same, detail);
    } else {
      Complex C = build_complement(p);
      add(out, "boundary-equals-intersection",
          faces_equal(dB, intersection_complex(B, C)),
          "∂B against B ∩ complement as face sets");
      add(out, "boundary-equals-complement-boundary",
          dB == boundary_complex(C));
      if (p.d >= 3)
        add(out, "boundary-is-closed", boundary_complex(dB).is_void());
    }
  } else if (!supplied) {
    // i = d-1: the full boundary complex of the cross-polytope is closed.
    bool closed = true;
    std::unordered_map<std::uint64_t, int> deg;
    for (const Face& facet : K.facets())
      for (const VertexLabel& v : facet.labels()) ++deg[facet.without(v).key()];
    for (const auto& [key, n] : deg)
      if (n != 2) { closed = false; break; }
    add(out, "closed-when-i-is-d-minus-1", closed);
  }

  if (!supplied) {
    for (int t = p.i; t >= 0; --t)
      manifold_level(out, t, p.d - (p.i - t),
                     " (i=" + std::to_string(t) + ",d=" +
                         std::to_string(p.d - (p.i - t)) + ")");
  }
}

// ---- homology ----

std::vector<long long> reduced_ranks(const Complex& K) {
  std::vector<long long> out((std::size_t)std::max(K.dim() + 1, 0), 0);
  for (const HomologyGroup& g : reduced_homology(K))
    if (g.degree >= 0) out[(std::size_t)g.degree] = g.rank;
  return out;
}

bool torsion_free(const Complex& K) {
  for (const HomologyGroup& g : reduced_homology(K))
    if (!g.torsion.empty()) return false;
  return true;
}

void suite_homology(SuiteResult& out, const BIDParams& p) {
  Complex B = build_b(p);
  std::vector<long long> rb = reduced_ranks(B);
  bool concentrated = true;
  for (int j = 0; j < (int)rb.size(); ++j)
    if (rb[(std::size_t)j] != (j == p.i ? 1 : 0)) concentrated = false;
  add(out, "b-homology-one-sphere-degree", concentrated && torsion_free(B),
      "reduced homology free of rank one in degree i");
  add(out, "b-reduced-euler", reduced_euler_char(B) == (p.i % 2 == 0 ? 1 : -1));

  if (p.i >= 1) {
    std::vector<long long> prev = reduced_ranks(build_b({p.i - 1, p.d - 1}));
    bool shift = rb.empty() ? false : rb[0] == 0;
    for (int j = 1; j < (int)rb.size(); ++j) {
      long long expect =
          (j - 1 < (int)prev.size()) ? prev[(std::size_t)j - 1] : 0;
      if (rb[(std::size_t)j] != expect) shift = false;
    }
    add(out, "mayer-vietoris-degree-shift", shift,
        "reduced homology of B(i,d) against B(i-1,d-1) shifted by one");
  }

  if (p.i <= p.d - 2) {
    Complex dB = build_boundary(p);
    std::vector<long long> rdb = reduced_ranks(dB);
    bool pattern = true;
    long long chi_expect = 0;
    for (int j = 0; j <= p.d - 2; ++j) {
      long long e = (j == 0) + (j == p.i) + (j == p.d - p.i - 2) +
                    (j == p.d - 2);
      chi_expect += (j % 2 == 0) ? e : -e;
      long long reduced = e - (j == 0 ? 1 : 0);
      if (j >= (int)rdb.size() ? reduced != 0
                               : rdb[(std::size_t)j] != reduced)
        pattern = false;
    }
    add(out, "boundary-betti-sphere-product", pattern && torsion_free(dB),
        "Betti numbers of a product of spheres S^i x S^(d-i-2)");
    add(out, "boundary-euler", euler_char(dB) == chi_expect);
  }
}

// ---- vectors ----

void suite_vectors(SuiteResult& out, const BIDParams& p) {
  Complex B = build_b(p);
  std::vector<long long> h = h_vector(B).h;
  add(out, "h-closed-form", h == h_closed_form(p.i, p.d));

  long long total = 0;
  for (long long v : h) total += v;
  add(out, "h-sums-to-facet-count", total == (long long)B.facet_count());

  if (2 * p.i <= p.d - 2) {
    std::vector<long long> g = g_boundary_closed_form(p.i, p.d);
    std::vector<long long> hb = h_vector(build_boundary(p)).h;
    hb.push_back(0);
    bool cumulative = true;
    long long acc = 0;
    for (int k = 0; k <= p.d; ++k) {
      acc += g[(std::size_t)k];
      if (acc != hb[(std::size_t)k]) cumulative = false;
    }
    add(out, "g-closed-form-cumulative", cumulative,
        "partial sums of g against the boundary h-vector");
    bool overlaps = true;
    for (int k = 0; k <= p.d; ++k) {
      std::optional<long long> c1 = g_boundary_case(1, p.i, p.d, k);
      std::optional<long long> c2 = g_boundary_case(2, p.i, p.d, k);
      std::optional<long long> c3 = g_boundary_case(3, p.i, p.d, k);
      if (c1 && c2 && *c1 != *c2) overlaps = false;
      if (c2 && c3 && *c2 != *c3) overlaps = false;
      if (c1 && c3 && *c1 != *c3) overlaps = false;
    }
    add(out, "g-case-overlaps-agree", overlaps);
  }

  if (p.i <= p.d - 2)
    add(out, "h-symmetry-identity", ns_identity_check(p.i, p.d),
        "h_{d-j} - h_j against the boundary g-vector");

  // Flag h sums refine the h-vector.
  bool flag_sums = true;
  std::vector<long long> sums((std::size_t)p.d + 1, 0);
  for (const auto& [S, v] : flag_h_all(B)) sums[(std::size_t)std::popcount(S)] += v;
  for (int j = 0; j <= p.d; ++j)
    if (sums[(std::size_t)j] != h[(std::size_t)j]) flag_sums = false;
  add(out, "flag-h-sums-to-h", flag_sums);

  if (p.d <= 7) {
    std::vector<long long> hp = h_prime(B);
    bool hp_pattern = true;
    for (int j = 0; j <= p.d; ++j) {
      long long expect = j <= p.i + 1 ? binom_ll(p.d, j) : 0;
      if (hp[(std::size_t)j] != expect) hp_pattern = false;
    }
    add(out, "h-prime-binomial-pattern", hp_pattern,
        "homology-corrected h-vector equals C(d,j) up to i+1, then 0");

    bool fhp = true;
    for (std::uint32_t S = 0; S <= coord_mask(p.d) && fhp; ++S)
      if (flag_h_prime(B, S) != (std::popcount(S) <= p.i + 1 ? 1 : 0))
        fhp = false;
    add(out, "flag-h-prime-indicator", fhp,
        "flag h' is the indicator of |S| <= i+1");
  }
}

// ---- sparla ----

void sparla_item(SuiteResult& out, int r, int i) {
  const int d = 2 * r + 2;
  Complex M = build_boundary({i, d});
  SparlaReport rep = sparla_check(euler_char(M), r, d);
  add(out, "inequality-holds", rep.holds,
      "lhs " + std::to_string(rep.lhs.get_d()) + " vs rhs " +
          std::to_string(rep.rhs.get_d()));
  bool parity_equality = ((i % 2) == (r % 2));
  add(out, "equality-iff-parity-match", rep.equality == parity_equality);
  add(out, "euler-characteristic-pattern",
      rep.chi - 2 == (i % 2 == 0 ? 2 : -2));
  if (i < r && parity_equality && d <= 6) {
    SparlaCounterexample ce = sparla_counterexample_report(r, i);
    add(out, "equality-without-skeleton",
        ce.report.equality && ce.report.skeleton_present == false &&
            ce.betti_i != 0 && ce.missing_face_found,
        "missing face " + (ce.missing_face_found ? ce.missing_face.str() : ""));
  }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "skeleton", "symmetry", "complement", "shelling", "manifold", "homology"};
  return names;
}

const std::vector<std::string>& sweep_suite_names() {
  static const std::vector<std::string> names{
      "counting", "membership", "skeleton", "symmetry", "complement",
      "shelling", "manifold", "homology", "vectors", "sparla"};
  return names;
}

int sweep_suite_limit(const std::string& suite) {
  if (suite == "counting") return 16;
  if (suite == "membership") return 8;
  if (suite == "skeleton") return 10;
  if (suite == "symmetry") return 10;
  if (suite == "complement") return 10;
  if (suite == "shelling") return 8;
  if (suite == "manifold") return 8;
  if (suite == "homology") return 8;
  if (suite == "vectors") return 8;
  if (suite == "sparla") return 8;
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

SuiteResult run_suite(const std::string& suite, const BIDParams& p,
                      const Complex* supplied) {
  validate(p);
  if (p.i < 0)
    throw std::invalid_argument("verification suites require i >= 0");
  SuiteResult out;
  out.suite = suite;
  out.i = p.i;
  out.d = p.d;
  if (suite == "counting") suite_counting(out, p);
  else if (suite == "membership") suite_membership(out, p);
  else if (suite == "skeleton") suite_skeleton(out, p);
  else if (suite == "symmetry") suite_symmetry(out, p);
  else if (suite == "complement") suite_complement(out, p);
  else if (suite == "shelling") suite_shelling(out, p);
  else if (suite == "manifold") suite_manifold(out, p, supplied);
  else if (suite == "homology") suite_homology(out, p);
  else if (suite == "vectors") suite_vectors(out, p);
  else if (suite == "all") {
    for (const std::string& s : verify_suite_names()) {
      SuiteResult part = run_suite(s, p, supplied);
      for (CheckResult& c : part.checks) {
        c.id = s + "/" + c.id;
        out.checks.push_back(std::move(c));
      }
    }
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return out;
}

std::vector<SuiteResult> run_sweep(const std::vector<std::string>& suites,
                                   int d_max, int jobs) {
  if (d_max < 1) throw std::invalid_argument("d-max must be at least 1");
  if (jobs < 1) jobs = 1;
  for (const std::string& s : suites)
    if (d_max > sweep_suite_limit(s))
      throw std::invalid_argument("suite '" + s + "' is limited to d <= " +
                                  std::to_string(sweep_suite_limit(s)));

  struct Item {
    std::string suite;
    int i, d;
  };
  std::vector<Item> plan;
  for (const std::string& s : suites) {
    if (s == "sparla") {
      for (int r = 1; 2 * r + 2 <= d_max; ++r)
        for (int i = 0; i <= 2 * r; ++i) plan.push_back({s, i, 2 * r + 2});
      continue;
    }
    for (int d = 1; d <= d_max; ++d)
      for (int i = 0; i <= d - 1; ++i) plan.push_back({s, i, d});
  }

  std::vector<SuiteResult> results(plan.size());
  auto eval = [&](std::size_t k) {
    const Item& it = plan[k];
    if (it.suite == "sparla") {
      SuiteResult r;
      r.suite = "sparla";
      r.i = it.i;
      r.d = it.d;
      sparla_item(r, (it.d - 2) / 2, it.i);
      results[k] = std::move(r);
    } else {
      results[k] = run_suite(it.suite, {it.i, it.d});
    }
  };
  if (jobs == 1) {
    for (std::size_t k = 0; k < plan.size(); ++k) eval(k);
  } else {
    std::size_t next = 0;
    while (next < plan.size()) {
      std::size_t batch = std::min((std::size_t)jobs, plan.size() - next);
      std::vector<std::future<void>> fs;
      for (std::size_t b = 0; b < batch; ++b)
        fs.push_back(std::async(std::launch::async, eval, next + b));
      for (auto& f : fs) f.get();
      next += batch;
    }
  }
  return results;
}

}  // namespace xpol
