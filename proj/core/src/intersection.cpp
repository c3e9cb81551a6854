#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "strata/integrals.hpp"

namespace strata {

namespace {

using Key = std::pair<int, std::vector<int>>;

std::shared_mutex& table_mutex() {
  static std::shared_mutex mu;
  return mu;
}

std::map<Key, Rational>& table() {
  static std::map<Key, Rational> t;
  return t;
}

bool in_range(int g, const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return false;
  int s = 0;
  for (int x : a) {
    if (x < 0) return false;
    s += x;
  }
  return s == 3 * g - 3 + n;
}

Rational compute(int g, const std::vector<int>& a);
Rational dvv(int g, const std::vector<int>& a);

Rational lookup(int g, std::vector<int> a) {
  if (!in_range(g, a)) return 0;
  std::sort(a.begin(), a.end());
  {
    std::shared_lock lock(table_mutex());
    auto it = table().find({g, a});
    if (it != table().end()) return it->second;
  }
  Rational v = compute(g, a);
  std::unique_lock lock(table_mutex());
  table().emplace(Key{g, a}, v);
  return v;
}

Rational compute(int g, const std::vector<int>& a) {
  // a is sorted and in range
  int n = static_cast<int>(a.size());
  if (g == 0 && n == 3) return 1;
  if (g == 1 && n == 1) return Rational(1, 24);
  if (a[0] == 0) {
    // string equation
    std::vector<int> rest(a.begin() + 1, a.end());
    Rational s = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      auto b = rest;
      --b[j];
      s += lookup(g, b);
    }
    return s;
  }
  auto one = std::find(a.begin(), a.end(), 1);
  if (one != a.end()) {
    std::vector<int> rest = a;
    rest.erase(rest.begin() + (one - a.begin()));
    return Rational(2 * g - 2 + n - 1) * lookup(g, rest);
  }
  return dvv(g, a);
}

// DVV on the largest exponent k+1; a sorted, in range, a.back() >= 1.
Rational dvv(int g, const std::vector<int>& a) {
  int k = a.back() - 1;
  std::vector<int> s(a.begin(), a.end() - 1);
  int m = static_cast<int>(s.size());
  Rational total = 0;
  for (int j = 0; j < m; ++j) {
    auto b = s;
    b[j] = k + s[j];
    total += double_factorial(2 * k + 2 * s[j] + 1) / double_factorial(2 * s[j] - 1) * lookup(g, b);
  }
  for (int r = 0; r <= k - 1; ++r) {
    int t = k - 1 - r;
    Rational w = double_factorial(2 * r + 1) * double_factorial(2 * t + 1) / 2;
    if (g >= 1) {
      auto b = s;
      b.push_back(r);
      b.push_back(t);
      total += w * lookup(g - 1, b);
    }
    for (int g1 = 0; g1 <= g; ++g1) {
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> i1{r}, i2{t};
        for (int j = 0; j < m; ++j) (mask & (1u << j) ? i1 : i2).push_back(s[j]);
        Rational x = lookup(g1, i1);
        if (x == 0) continue;
        total += w * x * lookup(g - g1, i2);
      }
    }
  }
  return total / double_factorial(2 * k + 3);
}

std::string format_entry(const Key& k, const Rational& v) {
  std::ostringstream os;
  os << "I g=" << k.first << " a=";
  for (std::size_t i = 0; i < k.second.size(); ++i) os << (i ? "," : "") << k.second[i];
  os << " v=" << to_string(v);
  return os.str();
}

}  // namespace

Rational psi_integral(int g, std::vector<int> exponents) { return lookup(g, std::move(exponents)); }

void load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // a missing table is an empty one
  std::string line;
  std::unique_lock lock(table_mutex());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int g;
    char abuf[4096], vbuf[4096];
    if (std::sscanf(line.c_str(), "I g=%d a=%4095s v=%4095s", &g, abuf, vbuf) != 3)
      throw std::invalid_argument("bad table line: " + line);
    std::vector<int> a;
    std::string as(abuf);
    std::stringstream ss(as);
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(std::stoi(tok));
    std::sort(a.begin(), a.end());
    table()[{g, a}] = parse_rational(vbuf);
  }
}

void save_table(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write table: " + path);
  std::shared_lock lock(table_mutex());
  std::vector<std::string> lines;
  for (const auto& [k, v] : table()) lines.push_back(format_entry(k, v));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
}

std::size_t table_size() {
  std::shared_lock lock(table_mutex());
  return table().size();
}

void clear_table() {
  std::unique_lock lock(table_mutex());
  table().clear();
}

TableAudit audit_table() {
  std::vector<std::pair<Key, Rational>> entries;
  {
    std::shared_lock lock(table_mutex());
    entries.assign(table().begin(), table().end());
  }
  TableAudit r;
  r.entries = entries.size();
  for (const auto& [k, v] : entries) {
    const auto& [g, a] = k;
    int n = static_cast<int>(a.size());
    if (g == 0) {
      Rational expect = factorial(n - 3);
      for (int x : a) expect /= factorial(x);
      ++r.genus0_checked;
      if (expect != v) r.failures.push_back("genus-0 closed form: " + format_entry(k, v));
    }
    bool base = (g == 0 && n == 3) || (g == 1 && n == 1);
    if (!base && a.front() == 0) {
      Rational rhs = 0;
      for (int j = 1; j < n; ++j) {
        if (a[j] == 0) continue;
        std::vector<int> c(a.begin() + 1, a.end());
        --c[j - 1];
        rhs += psi_integral(g, c);
      }
      ++r.string_checked;
      if (rhs != v) r.failures.push_back("string: " + format_entry(k, v));
    }
    auto one = std::find(a.begin(), a.end(), 1);
    if (!base && one != a.end()) {
      auto c = a;
      c.erase(c.begin() + (one - a.begin()));
      ++r.dilaton_checked;
      if (Rational(2 * g - 2 + n - 1) * psi_integral(g, c) != v)
        r.failures.push_back("dilaton: " + format_entry(k, v));
    }
    if (!base && a.back() >= 1 && dvv(g, a) != v) r.failures.push_back("dvv: " + format_entry(k, v));
  }
  return r;
}

}  // namespace strata
