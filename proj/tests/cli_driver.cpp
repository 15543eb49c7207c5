// End-to-end checks of the command-line tool: exit codes, output formats,
// file input/output and determinism. argv[1] names the binary under test.

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "xpol/io.hpp"
#include "xpol/shelling.hpp"

using nlohmann::ordered_json;

namespace {

std::string g_cli;
std::string g_dir = "/tmp/xpol_cli_test";
int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::printf("FAIL: %s\n", what.c_str());
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  RunResult r;
  std::string out = g_dir + "/stdout", err = g_dir + "/stderr";
  std::string cmd = g_cli + " " + args + " >" + out + " 2>" + err;
  int status = std::system(cmd.c_str());
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

ordered_json parse(const std::string& text, const std::string& what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  expect(!j.is_discarded(), what + ": output is not valid JSON");
  return j;
}

void test_build() {
  RunResult r = run("build --i 0 --d 3 --target B");
  expect(r.exit_code == 0, "build exit code");
  ordered_json j = parse(r.out, "build");
  expect(j["d"] == 3 && j["dim"] == 2 && j["facets"].size() == 2,
         "build B(0,3) shape");

  r = run("build --i 1 --d 4 --target boundary");
  j = parse(r.out, "build boundary");
  expect(j["facets"].size() == 16, "boundary of B(1,4) has 16 facets");

  r = run("build --i 1 --d 4 --target boundary --format text");
  expect(r.exit_code == 0, "text build exit code");
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  expect(lines == 16, "text build line count");

  r = run("build --i -1 --d 4 --target B");
  j = parse(r.out, "void build");
  expect(r.exit_code == 0 && j["facets"].empty() && j["dim"] == -2,
         "void complex serializes with dim -2");

  r = run("build --i 3 --d 4 --target boundary");
  expect(r.exit_code == 2, "boundary of the closed complex exits 2");
  expect(r.err.find("closed") != std::string::npos,
         "closed-complex error message");

  r = run("build --i 4 --d 4 --target B");
  expect(r.exit_code == 2, "i out of range exits 2");

  r = run("build --i 2 --d 5 --target star --format text");
  expect(r.exit_code == 0 && !r.out.empty(), "star target builds");

  // --out writes the file and keeps stdout empty
  std::string path = g_dir + "/out.json";
  r = run("build --i 0 --d 3 --target B --out " + path);
  expect(r.exit_code == 0 && r.out.empty(), "--out silences stdout");
  expect(parse(slurp(path), "build --out")["facets"].size() == 2,
         "--out file content");
}

void test_verify() {
  RunResult r = run("verify --i 2 --d 5 --suite all");
  expect(r.exit_code == 0, "verify all (2,5) passes");
  ordered_json j = parse(r.out, "verify");
  expect(j["pass"] == true && j["checks"].size() > 10, "verify check list");

  r = run("verify --i 1 --d 4 --suite homology");
  j = parse(r.out, "verify homology");
  expect(r.exit_code == 0 && j["suite"] == "homology", "homology suite");

  r = run("verify --i 1 --d 4 --suite nonsense");
  expect(r.exit_code == 2, "unknown suite exits 2");

  r = run("verify --i 7 --d 4 --suite all");
  expect(r.exit_code == 2, "invalid parameters exit 2");

  // a corrupted facet file must fail the manifold suite with a ridge witness
  RunResult full = run("build --i 1 --d 4 --format text");
  std::string corrupt = full.out.substr(full.out.find('\n') + 1);
  write_file(g_dir + "/corrupt.txt", corrupt);
  r = run("verify --i 1 --d 4 --suite manifold --facets " + g_dir +
          "/corrupt.txt");
  expect(r.exit_code == 1, "corrupted facet file exits 1");
  expect(r.out.find("ridge") != std::string::npos,
         "failure names an offending ridge");

  // the intact file passes
  write_file(g_dir + "/intact.txt", full.out);
  r = run("verify --i 1 --d 4 --suite manifold --facets " + g_dir +
          "/intact.txt");
  expect(r.exit_code == 0, "reference facet file passes");
}

void test_verify_order() {
  // a genuine star shelling, written to a file facet by facet
  xpol::ShellingOrder order = xpol::star_shelling({2, 4}, {4, false});
  std::string text;
  for (const xpol::Face& f : order.facets)
    text += xpol::word_of_facet(f, 4) + "\n";
  write_file(g_dir + "/star_order.txt", text);
  RunResult r = run("verify --i 2 --d 4 --order " + g_dir + "/star_order.txt");
  expect(r.exit_code == 0, "star shelling order verifies");
  ordered_json j = parse(r.out, "verify order");
  expect(j["pass"] == true && j["restrictions"].size() == 7,
         "restrictions are reported");
  expect(j["restrictions"][1] == ordered_json::array({"y1"}),
         "second restriction is {y1}");

  // two disjoint triangles cannot be shelled
  write_file(g_dir + "/bad_order.txt", "xxx\nyyy\n");
  r = run("verify --i 0 --d 3 --order " + g_dir + "/bad_order.txt");
  expect(r.exit_code == 1, "non-shelling exits 1");
  j = parse(r.out, "verify bad order");
  expect(j["pass"] == false && j["fail_index"] == 1, "failure index reported");

  r = run("verify --i 0 --d 3 --order " + g_dir + "/does_not_exist.txt");
  expect(r.exit_code == 2, "missing order file exits 2");
}

void test_report() {
  RunResult r = run("report homology --i 1 --d 4 --target boundary");
  ordered_json j = parse(r.out, "report homology");
  expect(r.exit_code == 0 && j.is_array() && j.size() == 3,
         "homology report shape");
  expect(j[1]["rank"] == 2 && j[2]["rank"] == 1, "torus ranks");

  r = run("report homology --i 2 --d 6 --target star --format text");
  expect(r.exit_code == 0 && r.out.find("rank 0") != std::string::npos,
         "star homology is trivial");

  r = run("report vectors --i 1 --d 4 --target B");
  j = parse(r.out, "report vectors");
  expect(j["f"] == ordered_json::array({1, 8, 24, 24, 8}), "f-vector of B(1,4)");
  expect(j["h"] == ordered_json::array({1, 4, 6, -4, 1}), "h-vector of B(1,4)");
  expect(j["closed_form"]["h"] == j["h"], "closed form h agrees");
  expect(j["flag_h"].size() == 16, "flag table size");

  r = run("report vectors --i 1 --d 4 --target boundary");
  j = parse(r.out, "report vectors boundary");
  expect(j["h"] == ordered_json::array({1, 5, 11, -1}),
         "h-vector of the torus");
  expect(j["closed_form"]["g"] == ordered_json::array({1, 4, 6, -12, 1}),
         "closed form g");
  expect(j["h_prime"] == ordered_json::array({1, 5, 11, 1}),
         "h' of the torus");

  r = run("report vectors --i 1 --d 4 --target star");
  expect(r.exit_code == 2, "vectors rejects unsupported targets");
}

void test_check_sparla() {
  RunResult r = run("check sparla --r 2 --i 0");
  ordered_json j = parse(r.out, "check sparla");
  expect(r.exit_code == 0, "sparla (2,0) exits 0");
  expect(j["lhs"] == "20" && j["rhs"] == "20" && j["equality"] == true,
         "equality at (2,0)");
  expect(j["skeleton_present"] == false, "skeleton absent at (2,0)");
  expect(j["counterexample"]["betti_i"] == 1 &&
             j["counterexample"]["missing_face"].size() == 3,
         "counterexample witnesses");

  r = run("check sparla --r 2 --i 1");
  j = parse(r.out, "check sparla (2,1)");
  expect(r.exit_code == 0 && j["equality"] == false &&
             !j.contains("counterexample"),
         "strict inequality at (2,1)");

  r = run("check sparla --r 0 --i 0");
  expect(r.exit_code == 2, "r = 0 exits 2");
  r = run("check sparla --r 2 --i 5");
  expect(r.exit_code == 2, "i out of range exits 2");
}

void test_sweep() {
  RunResult r = run("sweep --d-max 4");
  ordered_json j = parse(r.out, "sweep");
  expect(r.exit_code == 0 && j["pass"] == true && j["failures"] == 0,
         "sweep d <= 4 passes");

  r = run("sweep --d-max 16 --suites counting");
  j = parse(r.out, "sweep counting");
  expect(r.exit_code == 0 && j["pass"] == true, "counting sweep to d = 16");

  r = run("sweep --d-max 0");
  expect(r.exit_code == 2, "d-max 0 exits 2");

  r = run("sweep --d-max 16 --suites homology");
  expect(r.exit_code == 2, "homology sweep above its limit exits 2");

  r = run("sweep --d-max 4 --suites counting,nonsense");
  expect(r.exit_code == 2, "unknown sweep suite exits 2");
}

void test_usage() {
  expect(run("").exit_code == 2, "no subcommand exits 2");
  expect(run("frobnicate").exit_code == 2, "unknown subcommand exits 2");
  expect(run("build --d 4").exit_code == 2, "missing --i exits 2");
  expect(run("build --i 1 --d 4 --target Q").exit_code == 2,
         "unknown target exits 2");
  expect(run("build --i 1 --d 4 --format yaml").exit_code == 2,
         "unknown format exits 2");
  expect(run("--help").exit_code == 0, "--help exits 0");
  expect(run("report --i 1 --d 4").exit_code == 2,
         "report without a table exits 2");
}

void test_determinism() {
  RunResult a = run("verify --i 1 --d 5 --suite all");
  RunResult b = run("verify --i 1 --d 5 --suite all");
  expect(a.out == b.out && !a.out.empty(), "verify output is reproducible");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: cli_driver <path-to-cli>\n");
    return 1;
  }
  g_cli = argv[1];
  if (std::system(("mkdir -p " + g_dir).c_str()) != 0) {
    std::printf("cannot create %s\n", g_dir.c_str());
    return 1;
  }
  test_build();
  test_verify();
  test_verify_order();
  test_report();
  test_check_sparla();
  test_sweep();
  test_usage();
  test_determinism();
  if (g_failures == 0) std::printf("cli driver: all checks pass\n");
  else std::printf("cli driver: %d checks FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
