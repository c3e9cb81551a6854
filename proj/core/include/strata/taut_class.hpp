#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "strata/graph.hpp"
#include "strata/rational.hpp"

namespace strata {

// A formal sum of decorated strata c * xi_{Gamma*}(monomial) on M_{g,n}-bar.
// Keys are canonical decorated-graph keys; zero coefficients are never stored.
class TautClass {
 public:
  TautClass() = default;
  TautClass(int g, int n) : g_(g), n_(n) {}

  static TautClass fundamental(int g, int n);
  // xi_{Gamma*}(dec) with coefficient 1.
  static TautClass stratum(const DecGraph& d);
  static TautClass stratum(const Graph& gr) { return stratum(DecGraph::bare(gr)); }

  int g() const { return g_; }
  int n() const { return n_; }
  int dim() const { return 3 * g_ - 3 + n_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Canonicalizes; silently drops terms that exceed a vertex dimension.
  void add(const DecGraph& d, const Rational& c);
  void add_key(const std::string& key, const Rational& c);

  TautClass& operator+=(const TautClass& o);
  TautClass& operator-=(const TautClass& o);
  TautClass& operator*=(const Rational& c);
  bool operator==(const TautClass& o) const {
    return g_ == o.g_ && n_ == o.n_ && terms_ == o.terms_;
  }

  TautClass degree_part(int d) const;
  std::set<int> degrees() const;
  TautClass restrict_compact_type() const;

 private:
  void check_same(const TautClass& o) const;
  int g_ = 0, n_ = 3;
  std::map<std::string, Rational> terms_;
};

TautClass operator+(TautClass a, const TautClass& b);
TautClass operator-(TautClass a, const TautClass& b);
TautClass operator*(const Rational& c, TautClass a);
TautClass operator-(TautClass a);

int key_degree(const std::string& key);

// Relabels markings: perm[m] is the new marking of m (index 0 unused).
TautClass relabel(const TautClass& a, const std::vector<int>& perm);
// Same class seen on a space with more markings is not meaningful; this one
// only changes the ambient marking count when perm maps into 1..n_new.
TautClass relabel(const TautClass& a, const std::vector<int>& perm, int n_new);

std::string serialize(const TautClass& a);
TautClass parse_class(const std::string& text);

// One readable line per term, for diagnostics.
std::string term_line(const std::string& key, const Rational& c);

}  // namespace strata
