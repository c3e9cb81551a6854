#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/graphs.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/integrals.hpp"
#include "strata/rational.hpp"
#include "strata/taut_class.hpp"
#include "strata/verify.hpp"

namespace fs = std::filesystem;
using namespace strata;

namespace {

struct RunConfig {
  std::string table;
  std::string out;
  int jobs = 1;
  bool experimental = false;
  bool rebuild = false;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw std::invalid_argument("empty coefficient list");
  return v;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

// The table is read before the command and written back afterwards, so new
// entries accumulate across runs.
void open_table(const RunConfig& cfg) {
  if (cfg.table.empty() || !fs::exists(cfg.table)) return;
  if (!cfg.rebuild) {
    load_table(cfg.table);
    return;
  }
  // recompute every entry of the old file from scratch, ignoring its values
  clear_table();
  std::ifstream f(cfg.table);
  std::string line;
  while (std::getline(f, line)) {
    auto gp = line.find(" g="), ap = line.find(" a="), vp = line.find(" v=");
    if (line.rfind("I ", 0) != 0 || gp == std::string::npos || ap == std::string::npos || vp == std::string::npos)
      continue;
    int g = std::stoi(line.substr(gp + 3, ap - gp - 3));
    std::vector<int> e;
    std::stringstream ss(line.substr(ap + 3, vp - ap - 3));
    std::string item;
    while (std::getline(ss, item, ',')) e.push_back(std::stoi(item));
    psi_integral(g, e);
  }
}

int close_table(const RunConfig& cfg) {
  if (cfg.table.empty()) return 0;
  if (cfg.rebuild) {
    TableAudit a = audit_table();
    std::cerr << "table audit: " << a.entries << " entries, " << a.failures.size() << " failures\n";
    for (const auto& f : a.failures) std::cerr << "  " << f << "\n";
    if (!a.failures.empty()) return 1;
  }
  save_table(cfg.table);
  return 0;
}

struct ClassArgs {
  std::string name;
  int g = 2;
  int n = -1;
  std::string a = "1";
  std::string c = "0";
  std::string b = "0";
  int degree = -1;
};

TautClass build_class(const ClassArgs& x, const RunConfig& cfg) {
  if (x.n < 0) throw std::invalid_argument("-n is required");
  const std::string& s = x.name;
  if (s == "hyp-ct") return hyp_ct_formula(x.n);
  if (s == "hyp-rt") return hyp_rt_formula(x.n);
  if (s == "hyp-tilde") return hyp_tilde_formula(x.n, cfg.experimental);
  if (s == "hyp-rec") return hyp_recursive(x.n);
  if (s == "phigamma") return phigamma(x.n);
  if (s == "nct-rec") return nct_recursive(x.n);
  if (s == "nct-closed") return nct_closed(x.n);
  if (s == "pixton") {
    std::vector<Rational> a = parse_list(x.a);
    if (a.size() == 1) a.assign(x.n, a[0]);
    int dim = 3 * x.g - 3 + x.n;
    int deg = x.degree < 0 ? dim : x.degree;
    return pixton_exponential(x.g, x.n, a, parse_rational(x.c), parse_rational(x.b), deg);
  }
  if (s == "prod") {
    std::vector<Rational> a = parse_list(x.a);
    if (a.size() != 1) throw std::invalid_argument("prod takes a single psi coefficient");
    return prod_formula(x.g, x.n, a[0], parse_rational(x.c), parse_rational(x.b));
  }
  throw std::invalid_argument("unknown class " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tautological classes on moduli of stable curves"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("STRATA_TABLE")) cfg.table = env;
  app.add_option("--table", cfg.table, "Intersection table file (default: $STRATA_TABLE)");
  app.add_option("--out", cfg.out, "Output directory");
  app.add_option("--jobs", cfg.jobs, "Worker threads for pairing sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--experimental-tilde-n56", cfg.experimental, "Allow the enlarged graph sum for n = 5, 6");
  app.add_flag("--rebuild-table", cfg.rebuild, "Recompute the table from scratch and audit it");

  int gg = 0, gn = 0;
  std::string filter = "all";
  bool count = false;
  auto* graphs = app.add_subcommand("graphs", "List stable graphs");
  graphs->add_option("-g", gg, "Genus")->required();
  graphs->add_option("-n", gn, "Number of markings")->required();
  graphs->add_option("--filter", filter, "all|ct|rt|nrt|tilde");
  graphs->add_flag("--count", count, "Print the number of graphs only");

  ClassArgs ca;
  auto* cls = app.add_subcommand("class", "Build a class and write it serialized");
  cls->add_option("name", ca.name, "hyp-ct|hyp-rt|hyp-tilde|hyp-rec|phigamma|nct-rec|nct-closed|pixton|prod")
      ->required();
  cls->add_option("-n", ca.n, "Number of markings")->required();
  cls->add_option("-g", ca.g, "Genus (pixton, prod)");
  cls->add_option("--a", ca.a, "psi coefficients, comma separated p/q (pixton, prod)");
  cls->add_option("--c", ca.c, "lambda coefficient (pixton, prod)");
  cls->add_option("--b", ca.b, "boundary coefficient (pixton, prod)");
  cls->add_option("--degree", ca.degree, "Top degree kept (pixton)");

  std::string suite = "all";
  int max_n = 4;
  auto* ver = app.add_subcommand("verify", "Run an identity suite");
  ver->add_option("--suite", suite, "trees|pixton|hyp|nct|all");
  ver->add_option("--max-n", max_n, "Largest n checked");

  CLI11_PARSE(app, argc, argv);

  try {
    open_table(cfg);
    int rc = 0;
    if (*graphs) {
      GraphFilter f = parse_filter(filter);
      if (gg < 0 || gn < 0 || 2 * gg - 2 + gn <= 0) throw std::invalid_argument("unstable (g, n)");
      auto list = enumerate_stable_graphs(gg, gn, f);
      if (count) {
        std::cout << list.size() << "\n";
      } else {
        for (const auto& e : list) std::cout << graph_record(e.graph, e.aut) << "\n";
      }
    } else if (*cls) {
      TautClass c = build_class(ca, cfg);
      std::string text = serialize(c);
      if (cfg.out.empty()) {
        std::cout << text;
      } else {
        fs::path p = fs::path(cfg.out) / (ca.name + "-n" + std::to_string(ca.n) + ".class");
        write_text(p, text);
        std::cout << p.string() << "\n";
      }
    } else if (*ver) {
      SuiteOptions opt;
      opt.max_n = max_n;
      opt.jobs = cfg.jobs;
      opt.experimental_tilde = cfg.experimental;
      opt.on_line = [](const ReportLine& l) { std::cout << l.format() << std::endl; };
      Report r = run_suite(suite, opt);
      std::string body;
      for (const auto& l : r.lines) body += l.format() + "\n";
      fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
      write_text(dir / ("verify-" + suite + ".txt"), body);
      write_text(dir / ("verify-" + suite + ".summary"), r.summary());
      rc = r.ok() ? 0 : 1;
    }
    int trc = close_table(cfg);
    return rc ? rc : trc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
