// Acceptance run: one PASS/FAIL line per criterion, with the underlying
// identity lines printed as they complete.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/integrals.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
  std::string id;
  bool pass = true;
  double seconds = 0;
  std::string detail;
};

std::vector<Criterion> results;

void print(const Criterion& c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " t=%.2f", c.seconds);
  std::cout << c.id << " " << (c.pass ? "PASS" : "FAIL") << buf;
  if (!c.detail.empty()) std::cout << " " << c.detail;
  std::cout << std::endl;
  results.push_back(c);
}

// Collects the lines of a report whose ids start with one of the prefixes.
Criterion from_report(const std::string& id, const Report& r, std::vector<std::string> prefixes) {
  Criterion c{id};
  int total = 0;
  std::string failed;
  for (const auto& l : r.lines) {
    bool match = false;
    for (const auto& p : prefixes) match = match || l.id.rfind(p, 0) == 0;
    if (!match) continue;
    ++total;
    c.seconds += l.seconds;
    if (!l.pass) failed += (failed.empty() ? "" : ",") + l.suite + "/" + l.id;
  }
  c.pass = total > 0 && failed.empty();
  c.detail = "checks=" + std::to_string(total) + (failed.empty() ? "" : " failed=" + failed);
  return c;
}

Report run(const std::string& suite, int max_n) {
  SuiteOptions opt;
  opt.max_n = max_n;
  opt.on_line = [](const ReportLine& l) { std::cout << l.format() << std::endl; };
  return run_suite(suite, opt);
}

void guarded(const std::string& id, const std::function<std::pair<bool, std::string>()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Criterion c{id};
  try {
    auto [ok, detail] = f();
    c.pass = ok;
    c.detail = detail;
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("error=\"") + e.what() + "\"";
  }
  c.seconds = since(t0);
  print(c);
}

// Every exponent vector of genus 0 with n <= 8, up to order.
void fill_genus0(int n, int left, int max_part, std::vector<int>& a) {
  if (static_cast<int>(a.size()) == n) {
    if (left == 0) psi_integral(0, a);
    return;
  }
  for (int k = std::min(left, max_part); k >= 0; --k) {
    a.push_back(k);
    fill_genus0(n, left - k, k, a);
    a.pop_back();
  }
}

std::pair<bool, std::string> dvv_audit() {
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> a;
    fill_genus0(n, n - 3, n - 3, a);
  }
  // some higher genus entries so that string and dilaton have work
  psi_integral(1, {1});
  psi_integral(2, {4});
  psi_integral(2, {2, 2, 1, 1});
  psi_integral(3, {3, 3, 3});
  TableAudit au = audit_table();
  bool tau1 = psi_integral(1, {1}) == Rational(1, 24);
  bool ok = au.failures.empty() && tau1 && au.genus0_checked > 0;
  std::string d = "entries=" + std::to_string(au.entries) + " genus0=" + std::to_string(au.genus0_checked) +
                  " string=" + std::to_string(au.string_checked) +
                  " dilaton=" + std::to_string(au.dilaton_checked) + " tau1=" + (tau1 ? "1/24" : "wrong");
  if (!au.failures.empty()) d += " first=\"" + au.failures.front() + "\"";
  return {ok, d};
}

TautClass random_class(std::mt19937& rng, int g, int n, int d, int terms) {
  auto keys = generator_keys(g, n, d);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  TautClass c(g, n);
  for (int i = 0; i < terms; ++i) c.add_key(keys[pick(rng)], Rational(num(rng), den(rng)));
  return c;
}

std::pair<bool, std::string> infrastructure() {
  std::mt19937 rng(20240917);
  int checks = 0;
  auto eq = [&](const TautClass& a, const TautClass& b) {
    ++checks;
    return numerical_equal(a, b).equal();
  };
  for (int round = 0; round < 4; ++round) {
    TautClass a = random_class(rng, 1, 3, 1, 3);
    TautClass b = random_class(rng, 1, 3, 1, 3);
    TautClass c = random_class(rng, 1, 3, 1, 2);
    if (!eq(multiply(a, b), multiply(b, a))) return {false, "commutativity round " + std::to_string(round)};
    if (!eq(multiply(multiply(a, b), c), multiply(a, multiply(b, c))))
      return {false, "associativity round " + std::to_string(round)};

    // projection formula pi_*(pi^* x . y) = x . pi_* y
    TautClass x = random_class(rng, 1, 2, 1, 2);
    TautClass y = random_class(rng, 1, 3, 2, 3);
    if (!eq(pushforward_forget(multiply(pullback_forget(x), y)), multiply(x, pushforward_forget(y))))
      return {false, "projection formula round " + std::to_string(round)};

    // pi_* pi^* x vanishes and pi_*(psi_{n+1} pi^* x) = (2g - 2 + n) x
    TautClass z = random_class(rng, 2, 1, 2, 3);
    ++checks;
    if (!pushforward_forget(pullback_forget(z)).is_zero()) return {false, "degree drop"};
    if (!eq(pushforward_forget(multiply(psi_class(2, 2, 2), pullback_forget(z))), Rational(3) * z))
      return {false, "dilaton pushforward"};

    TautClass w = random_class(rng, 2, 2, 3, 5);
    std::string s = serialize(w);
    ++checks;
    if (serialize(parse_class(s)) != s) return {false, "serialization round " + std::to_string(round)};
  }
  return {true, "checks=" + std::to_string(checks)};
}

// Vanishing beyond six points, checked only against compact-type generators.
std::pair<bool, std::string> vanishing_proxy() {
  TautClass h = hyp_ct_formula(7).restrict_compact_type();
  const int cd = h.dim() - 7;
  std::vector<std::string> keys;
  for (const auto& k : generator_keys(2, 7, cd))
    if (decode_key(k).graph.h1() == 0) keys.push_back(k);
  Rational v;
  std::size_t i = first_nonzero_pairing(h, keys, 1, &v);
  if (i < keys.size()) return {false, "proxy=ct-pairing nonzero=" + to_string(v)};
  return {true, "proxy=ct-pairing generators=" + std::to_string(keys.size())};
}

}  // namespace

int main(int argc, char** argv) {
  // A11 is the long optional proxy; it runs only when asked for.
  // --only A3,A12 restricts the run to the listed criteria.
  bool with_a11 = false;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--with-a11") with_a11 = true;
    if (a == "--only" && i + 1 < argc) only = "," + std::string(argv[++i]) + ",";
  }
  if (const char* e = std::getenv("STRATA_ACCEPT_A11")) with_a11 = with_a11 || std::string(e) == "1";
  auto want = [&](std::initializer_list<const char*> ids) {
    if (only.empty()) return true;
    for (const char* id : ids)
      if (only.find("," + std::string(id) + ",") != std::string::npos) return true;
    return false;
  };

  if (want({"A1", "A2", "A3"})) {
    Report trees = run("trees", 8);
    if (want({"A1"})) print(from_report("A1", trees, {"chi-", "gne-"}));
    if (want({"A2"})) print(from_report("A2", trees, {"euler-"}));
    if (want({"A3"})) print(from_report("A3", trees, {"pullback-", "eulergen-"}));
  }
  if (want({"A4"})) guarded("A4", dvv_audit);
  if (want({"A5"})) print(from_report("A5", run("pixton", 3), {"exp-"}));
  if (want({"A6", "A7", "A8", "A9"})) {
    Report hyp = run("hyp", 4);
    if (want({"A6"})) print(from_report("A6", hyp, {"ct-n1-seed"}));
    if (want({"A7"})) print(from_report("A7", hyp, {"tilde-vs-rec-"}));
    if (want({"A8"})) print(from_report("A8", hyp, {"push-rec-", "push-phigamma-"}));
    if (want({"A9"})) print(from_report("A9", hyp, {"symmetry-"}));
  }
  if (want({"A10"})) print(from_report("A10", run("nct", 5), {"closed-vs-rec-n3", "closed-vs-rec-n4", "n5-spot"}));
  if (want({"A11"})) {
    if (with_a11)
      guarded("A11", vanishing_proxy);
    else
      print({"A11", false, 0, "not run (optional ct-pairing proxy; pass --with-a11)"});
  }
  if (want({"A12"})) guarded("A12", infrastructure);

  int pass = 0;
  bool required_ok = true;
  for (const auto& c : results) {
    pass += c.pass;
    if (!c.pass && c.id != "A11") required_ok = false;
  }
  std::cout << "acceptance " << pass << "/" << results.size() << std::endl;
  return required_ok ? 0 : 1;
}
