// xpol: build the B(i,d) complexes, verify their structural properties, and
// report homology / enumeration data. Exit codes: 0 success, 1 verification
// failure, 2 usage or parameter error.

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xpol/enumeration.hpp"
#include "xpol/io.hpp"
#include "xpol/shelling.hpp"
#include "xpol/verify.hpp"

namespace {

using xpol::json;

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

xpol::Complex build_target(const std::string& target, const xpol::BIDParams& p) {
  if (target == "B") return xpol::build_b(p);
  if (target == "complement") return xpol::build_complement(p);
  if (target == "boundary") return xpol::build_boundary(p);
  if (target == "star")
    return xpol::star(xpol::build_b(p), xpol::Face::of({{p.d, false}}));
  throw std::invalid_argument("unknown target '" + target + "'");
}

json labels_json(const xpol::Face& f) {
  json out = json::array();
  for (const xpol::VertexLabel& v : f.labels()) out.push_back(v.str());
  return out;
}

json coords_json(std::uint32_t mask) {
  json out = json::array();
  for (int c : xpol::mask_elements(mask)) out.push_back(c);
  return out;
}

json suite_json(const xpol::SuiteResult& r) {
  json out;
  out["suite"] = r.suite;
  out["i"] = r.i;
  out["d"] = r.d;
  out["pass"] = r.pass();
  json checks = json::array();
  for (const xpol::CheckResult& c : r.checks) {
    json row;
    row["check"] = c.id;
    row["pass"] = c.pass;
    if (!c.detail.empty()) row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);
  return out;
}

int cmd_build(const std::string& target, int i, int d,
              const std::string& format, const std::string& out) {
  xpol::Complex K = build_target(target, {i, d});
  if (format == "text") write_out(out, xpol::complex_to_text(K));
  else write_out(out, dump(xpol::complex_to_json(K)));
  return 0;
}

int cmd_verify_order(int i, int d, const std::string& order_file,
                     const std::string& format, const std::string& out) {
  (void)i;
  int dd = d;
  std::vector<xpol::Face> order =
      xpol::facets_from_text(read_file(order_file), d, &dd);
  xpol::Complex K = xpol::Complex::from_facets(dd, order);
  xpol::ShellingCheck chk = xpol::verify_shelling(K, order);
  json j;
  j["suite"] = "shelling-order";
  j["d"] = dd;
  j["facets"] = order.size();
  j["pass"] = chk.ok;
  if (chk.ok) {
    json rs = json::array();
    for (const xpol::Face& f : chk.restrictions) rs.push_back(labels_json(f));
    j["restrictions"] = std::move(rs);
  } else {
    j["fail_index"] = chk.fail_index;
    json mins = json::array();
    for (const xpol::Face& f : chk.minimal_new_faces)
      mins.push_back(labels_json(f));
    j["minimal_new_faces"] = std::move(mins);
  }
  if (format == "text") {
    std::string text = chk.ok ? "valid shelling\n"
                              : "not a shelling (fails at position " +
                                    std::to_string(chk.fail_index) + ")\n";
    write_out(out, text);
  } else {
    write_out(out, dump(j));
  }
  return chk.ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, int i, int d,
               const std::string& facets_file, const std::string& order_file,
               const std::string& format, const std::string& out) {
  if (!order_file.empty()) return cmd_verify_order(i, d, order_file, format, out);
  xpol::Complex supplied;
  bool have_supplied = false;
  if (!facets_file.empty()) {
    supplied = xpol::complex_from_text(read_file(facets_file), d);
    have_supplied = true;
  }
  xpol::SuiteResult r =
      xpol::run_suite(suite, {i, d}, have_supplied ? &supplied : nullptr);
  if (format == "text") {
    std::string text;
    for (const xpol::CheckResult& c : r.checks)
      text += std::string(c.pass ? "pass" : "FAIL") + "  " + c.id +
              (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
    text += std::string(r.pass() ? "pass" : "FAIL") + "  overall\n";
    write_out(out, text);
  } else {
    write_out(out, dump(suite_json(r)));
  }
  return r.pass() ? 0 : 1;
}

int cmd_report_homology(int i, int d, const std::string& target,
                        const std::string& format, const std::string& out) {
  xpol::Complex K = build_target(target, {i, d});
  std::vector<xpol::HomologyGroup> h = xpol::reduced_homology(K);
  if (format == "text") {
    std::string text;
    for (const xpol::HomologyGroup& g : h) {
      text += "H~_" + std::to_string(g.degree) + " rank " +
              std::to_string(g.rank);
      if (!g.torsion.empty()) {
        text += " torsion";
        for (const mpz_class& t : g.torsion) text += " " + t.get_str();
      }
      text += "\n";
    }
    write_out(out, text);
  } else {
    write_out(out, dump(xpol::homology_to_json(h)));
  }
  return 0;
}

int cmd_report_vectors(int i, int d, const std::string& target,
                       const std::string& format, const std::string& out) {
  xpol::BIDParams p{i, d};
  xpol::Complex K = build_target(target, p);
  json j;
  j["i"] = i;
  j["d"] = d;
  j["target"] = target;
  {
    xpol::FVector fv = xpol::f_vector(K);
    json f = json::array();
    for (long long v : fv.counts) f.push_back(v);
    j["f"] = std::move(f);  // starts at f_{-1}
    json h = json::array();
    for (long long v : xpol::h_vector(K).h) h.push_back(v);
    j["h"] = std::move(h);
  }
  {
    json hp = json::array();
    for (long long v : xpol::h_prime(K)) hp.push_back(v);
    j["h_prime"] = std::move(hp);
  }
  json closed;
  if (target == "B" && i >= 0) {
    json h = json::array();
    for (long long v : xpol::h_closed_form(i, d)) h.push_back(v);
    closed["h"] = std::move(h);
  }
  if (target == "boundary" && i >= 0 && 2 * i <= d - 2) {
    std::vector<long long> g = xpol::g_boundary_closed_form(i, d);
    json gj = json::array(), hj = json::array();
    long long acc = 0;
    for (long long v : g) {
      gj.push_back(v);
      acc += v;
      hj.push_back(acc);
    }
    closed["g"] = std::move(gj);
    closed["h_cumulative"] = std::move(hj);
  }
  if (!closed.empty()) j["closed_form"] = std::move(closed);

  json fh = json::array();
  for (const auto& [S, v] : xpol::flag_h_all(K)) {
    json row;
    row["S"] = coords_json(S);
    row["value"] = v;
    fh.push_back(std::move(row));
  }
  j["flag_h"] = std::move(fh);

  json fhp = json::array();
  for (const auto& [S, v] : xpol::flag_h_all(K)) {
    (void)v;
    json row;
    row["S"] = coords_json(S);
    row["value"] = xpol::flag_h_prime(K, S);
    fhp.push_back(std::move(row));
  }
  j["flag_h_prime"] = std::move(fhp);

  if (format == "text") {
    std::string text;
    auto line = [&](const std::string& name, const json& arr) {
      text += name + ":";
      for (const json& v : arr) text += " " + v.dump();
      text += "\n";
    };
    line("f", j["f"]);
    line("h", j["h"]);
    line("h_prime", j["h_prime"]);
    if (j.contains("closed_form"))
      for (auto& [k, arr] : j["closed_form"].items())
        line("closed_form." + k, arr);
    write_out(out, text);
  } else {
    write_out(out, dump(j));
  }
  return 0;
}

int cmd_check_sparla(int r, int i, const std::string& format,
                     const std::string& out) {
  if (r < 1) throw std::invalid_argument("require r >= 1");
  const int d = 2 * r + 2;
  if (i < 0 || i > d - 2)
    throw std::invalid_argument("require 0 <= i <= 2r");
  xpol::Complex M = xpol::build_boundary({i, d});
  xpol::SparlaReport rep = xpol::sparla_check(xpol::euler_char(M), r, d);
  rep.skeleton_present = xpol::contains_skeleton(M, r);
  json j;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["chi"] = rep.chi;
  j["lhs"] = xpol::rational_str(rep.lhs);
  j["rhs"] = xpol::rational_str(rep.rhs);
  j["holds"] = rep.holds;
  j["equality"] = rep.equality;
  j["skeleton_present"] = *rep.skeleton_present;
  bool ok = rep.holds;
  if (i < r && (r - i) % 2 == 0) {
    xpol::SparlaCounterexample ce = xpol::sparla_counterexample_report(r, i);
    json c;
    c["i"] = ce.i;
    c["d"] = ce.d;
    c["betti_i"] = ce.betti_i;
    c["skeleton_present"] = *ce.report.skeleton_present;
    c["missing_face"] =
        ce.missing_face_found ? labels_json(ce.missing_face) : json::array();
    j["counterexample"] = std::move(c);
    ok = ok && ce.report.equality && !*ce.report.skeleton_present &&
         ce.betti_i != 0 && ce.missing_face_found;
  }
  if (format == "text") {
    std::string text = "lhs " + xpol::rational_str(rep.lhs) + "  rhs " +
                       xpol::rational_str(rep.rhs) +
                       (rep.equality ? "  (equality)" : "") + "\n";
    write_out(out, text);
  } else {
    write_out(out, dump(j));
  }
  return ok ? 0 : 1;
}

int cmd_sweep(int d_max, const std::vector<std::string>& suites, int jobs,
              const std::string& format, const std::string& out) {
  std::vector<std::string> selected =
      suites.empty() ? xpol::sweep_suite_names() : suites;
  std::vector<xpol::SuiteResult> results =
      xpol::run_sweep(selected, d_max, jobs);
  std::size_t failures = 0;
  json items = json::array();
  for (const xpol::SuiteResult& r : results) {
    if (!r.pass()) ++failures;
    json row;
    row["suite"] = r.suite;
    row["i"] = r.i;
    row["d"] = r.d;
    row["pass"] = r.pass();
    json failed = json::array();
    for (const xpol::CheckResult& c : r.checks)
      if (!c.pass) failed.push_back(c.id);
    if (!failed.empty()) row["failed"] = std::move(failed);
    items.push_back(std::move(row));
  }
  json j;
  j["d_max"] = d_max;
  j["suites"] = selected;
  j["items"] = std::move(items);
  j["total"] = results.size();
  j["failures"] = failures;
  j["pass"] = failures == 0;
  if (format == "text") {
    std::string text;
    for (const xpol::SuiteResult& r : results)
      if (!r.pass())
        text += "FAIL " + r.suite + " i=" + std::to_string(r.i) +
                " d=" + std::to_string(r.d) + "\n";
    text += std::to_string(results.size()) + " items, " +
            std::to_string(failures) + " failures\n";
    write_out(out, text);
  } else {
    write_out(out, dump(j));
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Centrally symmetric subcomplexes B(i,d) of the cross-polytope "
      "boundary: construction, verification, homology and enumeration."};
  app.require_subcommand(1);

  int i = 0, d = 1, r = 1, d_max = 1, jobs = 1;
  std::string target = "B", format = "json", out, suite = "all";
  std::string facets_file, order_file;
  std::vector<std::string> suites;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out, "output file (default stdout)");
  };

  CLI::App* b = app.add_subcommand("build", "construct a complex and print it");
  b->add_option("--i", i, "subcomplex parameter")->required();
  b->add_option("--d", d, "ambient dimension")->required();
  b->add_option("--target", target, "B | complement | boundary | star")
      ->check(CLI::IsMember({"B", "complement", "boundary", "star"}));
  add_format(b);

  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("--i", i, "subcomplex parameter")->required();
  v->add_option("--d", d, "ambient dimension")->required();
  v->add_option("--suite", suite,
                "skeleton | symmetry | complement | shelling | manifold | "
                "homology | all")
      ->check(CLI::IsMember({"skeleton", "symmetry", "complement", "shelling",
                             "manifold", "homology", "all"}));
  v->add_option("--facets", facets_file,
                "verify this facet file against the constructed complex");
  v->add_option("--order", order_file,
                "verify a facet order from a file as a shelling");
  add_format(v);

  CLI::App* rep = app.add_subcommand("report", "print computed data");
  rep->require_subcommand(1);
  CLI::App* rh = rep->add_subcommand("homology", "reduced homology groups");
  rh->add_option("--i", i)->required();
  rh->add_option("--d", d)->required();
  rh->add_option("--target", target, "B | complement | boundary | star")
      ->check(CLI::IsMember({"B", "complement", "boundary", "star"}));
  add_format(rh);
  CLI::App* rv = rep->add_subcommand("vectors", "f/h/g/h'/flag tables");
  rv->add_option("--i", i)->required();
  rv->add_option("--d", d)->required();
  rv->add_option("--target", target, "B | boundary")
      ->check(CLI::IsMember({"B", "boundary"}));
  add_format(rv);

  CLI::App* chk = app.add_subcommand("check", "closed-form checks");
  chk->require_subcommand(1);
  CLI::App* sp = chk->add_subcommand(
      "sparla", "upper-bound inequality for M = boundary of B(i, 2r+2)");
  sp->add_option("--r", r, "half the manifold dimension")->required();
  sp->add_option("--i", i, "subcomplex parameter")->required();
  add_format(sp);

  CLI::App* sw = app.add_subcommand("sweep", "run suites over all (i,d)");
  sw->add_option("--d-max", d_max, "largest ambient dimension")->required();
  sw->add_option("--suites", suites,
                 "subset of: counting membership skeleton symmetry complement "
                 "shelling manifold homology vectors sparla")
      ->delimiter(',');
  sw->add_option("--jobs", jobs, "concurrent suite evaluations");
  add_format(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (b->parsed()) return cmd_build(target, i, d, format, out);
    if (v->parsed())
      return cmd_verify(suite, i, d, facets_file, order_file, format, out);
    if (rep->parsed() && rh->parsed())
      return cmd_report_homology(i, d, target, format, out);
    if (rep->parsed() && rv->parsed())
      return cmd_report_vectors(i, d, target, format, out);
    if (chk->parsed() && sp->parsed())
      return cmd_check_sparla(r, i, format, out);
    if (sw->parsed()) return cmd_sweep(d_max, suites, jobs, format, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
