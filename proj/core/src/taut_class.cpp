#include "strata/taut_class.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "strata/graphs.hpp"

namespace strata {

namespace {

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) break;
    start = p + sep.size();
  }
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

TautClass TautClass::fundamental(int g, int n) {
  Graph gr;
  gr.add_vertex(g);
  for (int i = 1; i <= n; ++i) gr.add_leg(0, i);
  return stratum(gr);
}

TautClass TautClass::stratum(const DecGraph& d) {
  TautClass t(d.graph.total_genus(), d.graph.num_legs());
  t.add(d, 1);
  return t;
}

void TautClass::add(const DecGraph& d, const Rational& c) {
  if (c == 0) return;
  if (d.degree() > dim() || !d.fits_vertex_dims()) return;
  for (const auto& k : d.dec.kappa)
    if (!std::is_sorted(k.begin(), k.end())) {
      DecGraph s = d;
      for (auto& kv : s.dec.kappa) std::sort(kv.begin(), kv.end());
      add_key(canonical_key(s), c);
      return;
    }
  add_key(canonical_key(d), c);
}

void TautClass::add_key(const std::string& key, const Rational& c0) {
  // mpq_class(p, q) is not reduced on construction; GMP arithmetic assumes it is
  Rational c = c0;
  c.canonicalize();
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void TautClass::check_same(const TautClass& o) const {
  if (g_ != o.g_ || n_ != o.n_) throw std::invalid_argument("ambient mismatch");
}

TautClass& TautClass::operator+=(const TautClass& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
TautClass operator*(const Rational& c, TautClass a) { return a *= c; }
TautClass operator-(TautClass a) { return a *= Rational(-1); }

int key_degree(const std::string& key) { return decode_key(key).degree(); }

TautClass TautClass::degree_part(int d) const {
  TautClass out(g_, n_);
  for (const auto& [k, c] : terms_)
    if (key_degree(k) == d) out.terms_.emplace(k, c);
  return out;
}

std::set<int> TautClass::degrees() const {
  std::set<int> out;
  for (const auto& [k, c] : terms_) out.insert(key_degree(k));
  return out;
}

TautClass TautClass::restrict_compact_type() const {
  TautClass out(g_, n_);
  for (const auto& [k, c] : terms_)
    if (is_compact_type(decode_key(k).graph)) out.terms_.emplace(k, c);
  return out;
}

TautClass relabel(const TautClass& a, const std::vector<int>& perm, int n_new) {
  TautClass out(a.g(), n_new);
  for (const auto& [k, c] : a.terms()) {
    DecGraph d = decode_key(k);
    d.graph = relabel(d.graph, perm);
    out.add(d, c);
  }
  return out;
}

TautClass relabel(const TautClass& a, const std::vector<int>& perm) { return relabel(a, perm, a.n()); }

std::string term_line(const std::string& key, const Rational& c) {
  DecGraph d = decode_key(key);
  std::ostringstream os;
  os << to_string(c) << " | " << graph_record(d.graph, canonicalize(DecGraph::bare(d.graph), false).aut)
     << " | psi=";
  auto slots = flag_slots(d.graph);
  bool first = true;
  for (int f = 0; f < d.graph.num_flags(); ++f) {
    if (!d.dec.psi[f]) continue;
    os << (first ? "" : ",") << slots[f].first << '.' << slots[f].second << ':' << d.dec.psi[f];
    first = false;
  }
  os << " | kappa=";
  first = true;
  for (int v = 0; v < d.graph.num_vertices(); ++v) {
    const auto& ks = d.dec.kappa[v];
    for (std::size_t i = 0; i < ks.size();) {
      std::size_t j = i;
      while (j < ks.size() && ks[j] == ks[i]) ++j;
      os << (first ? "" : ",") << v << ':' << ks[i] << ':' << (j - i);
      first = false;
      i = j;
    }
  }
  return os.str();
}

std::string serialize(const TautClass& a) {
  std::ostringstream os;
  os << "C g=" << a.g() << " n=" << a.n() << '\n';
  for (const auto& [k, c] : a.terms()) os << term_line(k, c) << '\n';
  return os.str();
}

TautClass parse_class(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("C ", 0) != 0)
    throw std::invalid_argument("class file must start with a C header");
  int g = -1, n = -1;
  {
    std::istringstream hs(line.substr(2));
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("g=", 0) == 0) g = std::stoi(tok.substr(2));
      if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
    }
  }
  if (g < 0 || n < 0) throw std::invalid_argument("bad class header: " + line);
  TautClass out(g, n);
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    auto parts = split_on(line, " | ");
    if (parts.size() != 4) throw std::invalid_argument("bad term line: " + line);
    Rational c = parse_rational(trim(parts[0]));
    DecGraph d = DecGraph::bare(parse_graph_record(trim(parts[1])));
    auto slots = flag_slots(d.graph);
    std::string ps = trim(parts[2]);
    if (ps.rfind("psi=", 0) != 0) throw std::invalid_argument("bad psi field: " + line);
    ps = ps.substr(4);
    if (!ps.empty()) {
      for (const auto& item : split_on(ps, ",")) {
        int v, s, e;
        if (std::sscanf(item.c_str(), "%d.%d:%d", &v, &s, &e) != 3)
          throw std::invalid_argument("bad psi entry: " + item);
        int f = -1;
        for (int x = 0; x < d.graph.num_flags(); ++x)
          if (slots[x] == std::make_pair(v, s)) f = x;
        if (f < 0) throw std::invalid_argument("psi on a nonexistent flag: " + item);
        d.dec.psi[f] = e;
      }
    }
    std::string ks = trim(parts[3]);
    if (ks.rfind("kappa=", 0) != 0) throw std::invalid_argument("bad kappa field: " + line);
    ks = ks.substr(6);
    if (!ks.empty()) {
      for (const auto& item : split_on(ks, ",")) {
        int v, a, e;
        if (std::sscanf(item.c_str(), "%d:%d:%d", &v, &a, &e) != 3)
          throw std::invalid_argument("bad kappa entry: " + item);
        if (v < 0 || v >= d.graph.num_vertices()) throw std::invalid_argument("kappa on a nonexistent vertex");
        for (int i = 0; i < e; ++i) d.dec.kappa[v].push_back(a);
      }
      for (auto& kv : d.dec.kappa) std::sort(kv.begin(), kv.end());
    }
    out.add(d, c);
  }
  return out;
}

}  // namespace strata
