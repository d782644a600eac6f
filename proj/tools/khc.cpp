// khc: reduced Khovanov homology, curve pairings, and strong-inversion
// tables from the command line.  Subcommands: kh, pair, kappa, table,
// verify.  Exit status 0 on success, 1 for verification failures, 2 for
// parse or usage errors.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "khc/checks.hpp"
#include "khc/cube.hpp"
#include "khc/diagram.hpp"
#include "khc/inversions.hpp"
#include "khc/scan.hpp"
#include "khc/typed.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One diagram source must be picked; CLI11 only enforces mutual exclusion.
khc::Diagram pick_diagram(const std::string& pd_path,
                          const std::vector<int>& torus,
                          const std::vector<int>& two_bridge) {
  if (!pd_path.empty()) return khc::parse_pd(read_input(pd_path));
  if (!torus.empty()) return khc::gen_torus_link(torus[0], torus[1]);
  if (!two_bridge.empty()) return khc::gen_two_bridge(two_bridge[0], two_bridge[1]);
  throw CLI::ValidationError("kh", "need one of --pd, --torus, --two-bridge");
}

// The left side of a pairing: either a curve literal like "a(1/2)" or the
// spelled-out form "arc 1/2".
khc::Curve parse_left_arc(const std::string& text) {
  std::string t = text;
  if (t.rfind("arc ", 0) == 0) t = "a(" + t.substr(4) + ")";
  khc::Curve c = khc::parse_curve(t);
  if (c.kind != khc::CurveKind::Arc)
    throw khc::ParseError("left side of a pairing must be an arc, got " + text);
  return c;
}

void print_dims(const khc::BigradedDims& dims, bool tsv, bool with_det) {
  if (tsv) {
    std::cout << dims.tsv();
    return;
  }
  std::cout << dims.pretty();
  std::cout << "total dim = " << dims.total() << "\n";
  if (with_det) std::cout << "det = " << dims.determinant() << "\n";
}

int run_kh(const std::string& pd_path, const std::vector<int>& torus,
           const std::vector<int>& two_bridge, bool oracle, bool tsv) {
  const khc::Diagram d = pick_diagram(pd_path, torus, two_bridge);
  print_dims(oracle ? khc::kh_reduced_cube(d) : khc::kh_reduced_scan(d), tsv,
             /*with_det=*/true);
  return 0;
}

int run_pair(const std::string& left, const std::string& right, bool tsv) {
  const khc::TypeD arc = khc::curve_to_typeD(parse_left_arc(left));
  khc::BigradedDims merged;
  for (const khc::Curve& c : khc::parse_multicurve(right))
    merged.merge(khc::mor_pair(arc, khc::curve_to_typeD(c)));
  print_dims(merged, tsv, /*with_det=*/false);
  return 0;
}

int run_kappa(const std::string& data_path, const std::string& knot, int inv,
              bool tsv) {
  std::vector<khc::InversionRecord> matches;
  for (const khc::InversionRecord& r : khc::load_table(data_path))
    if (r.knot == knot && (inv == 0 || r.inv == inv)) matches.push_back(r);
  if (matches.empty())
    throw khc::ParseError("no record for " + knot +
                          (inv ? "^" + std::to_string(inv) : "") + " in " +
                          data_path);
  if (matches.size() > 1)
    throw khc::ParseError(knot + " has " + std::to_string(matches.size()) +
                          " inversions on file; pick one with an index");
  const khc::BigradedDims k = khc::kappa(matches.front());
  if (!tsv) std::cout << matches.front().str() << "\n";
  print_dims(k, tsv, /*with_det=*/false);
  return 0;
}

int run_table(const std::string& data_path, bool tsv) {
  const std::vector<khc::InversionRecord> table = khc::load_table(data_path);
  if (!tsv) {
    khc::emit_table(std::cout, table);
    return 0;
  }
  std::cout << "knot\tinv\tk\tn\tdim\n";
  for (const khc::InversionRecord& r : table)
    std::cout << r.knot << "\t" << r.inv << "\t" << r.k << "\t" << r.n << "\t"
              << 4 * r.n << "\n";
  return 0;
}

int run_verify(const std::string& data_path, const std::string& pd_path) {
  khc::CheckOptions opt;
  opt.data_path = data_path;
  opt.montesinos_pd_path = pd_path;
  const std::vector<khc::CheckResult> results = khc::run_acceptance(opt);
  bool all = true;
  for (size_t i = 0; i < results.size(); ++i) {
    const khc::CheckResult& r = results[i];
    std::printf("criterion %zu (%s): %s%s%s [%lld ms]\n", i + 1, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.empty() ? "" : " - ",
                r.detail.c_str(), r.millis);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced Khovanov homology and immersed-curve pairings"};
  app.require_subcommand(1);

  std::string pd_path;
  std::vector<int> torus, two_bridge;
  bool oracle = false, tsv = false;
  std::string left, right;
  std::string data_path = "data/inversions.txt";
  std::string knot;
  int inv = 0;

  CLI::App* kh = app.add_subcommand("kh", "homology of one diagram");
  CLI::Option* opt_pd = kh->add_option("--pd", pd_path, "PD code file, - for stdin");
  CLI::Option* opt_torus =
      kh->add_option("--torus", torus, "torus link T(p, q)")->expected(2);
  CLI::Option* opt_tb =
      kh->add_option("--two-bridge", two_bridge, "two-bridge link b(p, q)")->expected(2);
  opt_pd->excludes(opt_torus)->excludes(opt_tb);
  opt_torus->excludes(opt_tb);
  kh->add_flag("--oracle", oracle, "use the resolution cube, not scanning");
  kh->add_flag("--tsv", tsv, "machine-readable output");

  CLI::App* pair = app.add_subcommand("pair", "pair an arc with a multicurve");
  pair->add_option("arc", left, "arc literal, e.g. \"a(0)\"")->required();
  pair->add_option("curves", right, "multicurve literal, e.g. \"r1(4) + s2(inf)\"")
      ->required();
  pair->add_flag("--tsv", tsv, "machine-readable output");

  CLI::App* kap = app.add_subcommand("kappa", "kappa of a recorded inversion");
  kap->add_option("--data", data_path, "strong-inversion records file");
  kap->add_option("knot", knot, "knot name, e.g. 9_46")->required();
  kap->add_option("inv", inv, "inversion index when the knot has several");
  kap->add_flag("--tsv", tsv, "machine-readable output");

  CLI::App* tab = app.add_subcommand("table", "summarize the records file");
  tab->add_option("--data", data_path, "strong-inversion records file");
  tab->add_flag("--tsv", tsv, "machine-readable output");

  std::string companion_pd = "data/tau_plus1.pd";
  CLI::App* ver = app.add_subcommand("verify", "run the acceptance checks");
  ver->add_option("--data", data_path, "strong-inversion records file");
  ver->add_option("--pd", companion_pd, "companion branch-set diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "khc: " << e.what() << "\n";
    return 2;
  }

  try {
    if (kh->parsed()) return run_kh(pd_path, torus, two_bridge, oracle, tsv);
    if (pair->parsed()) return run_pair(left, right, tsv);
    if (kap->parsed()) return run_kappa(data_path, knot, inv, tsv);
    if (tab->parsed()) return run_table(data_path, tsv);
    return run_verify(data_path, companion_pd);
  } catch (const std::exception& e) {
    std::cerr << "khc: " << e.what() << "\n";
    return 2;
  }
}
