#include "strata/hyperelliptic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "drawn.hpp"
#include "strata/algebra.hpp"
#include "strata/graphs.hpp"

namespace strata {

namespace {

// Exponents of the ambient factors of a term: lambda, omega_1..omega_n, and
// the power of (-lambda - delta_1).
struct Ambient {
  std::vector<int> e;
  explicit Ambient(int n) : e(n + 2, 0) {}
  int& lambda() { return e[0]; }
  int& omega(int i) { return e[i]; }
  int& hodge_delta() { return e.back(); }
};

struct Option {
  Rational c;
  int deg = 0;
  int t = 0;
  std::vector<std::pair<int, int>> psi;  // flag, exponent
  std::vector<std::pair<int, int>> amb;  // ambient slot, exponent
};
using Factor = std::vector<Option>;

using Buckets = std::map<std::vector<int>, TautClass>;

// Multiplies one option per factor; keeps products with factor degree in
// [lo, hi]. With t_weight the coefficient gains (total t)!.
void expand(const Graph& gr, int g, int n, const std::vector<Factor>& factors, int lo, int hi,
            bool t_weight, const Rational& weight, Buckets& out) {
  DecGraph cur = DecGraph::bare(gr);
  Ambient amb(n);
  std::function<void(std::size_t, const Rational&, int, int)> rec = [&](std::size_t idx, const Rational& c,
                                                                        int deg, int t) {
    if (idx == factors.size()) {
      if (deg < lo) return;
      Rational cc = t_weight ? c * factorial(t) : c;
      auto it = out.find(amb.e);
      if (it == out.end()) it = out.emplace(amb.e, TautClass(g, n)).first;
      it->second.add(cur, cc);
      return;
    }
    for (const auto& o : factors[idx]) {
      if (deg + o.deg > hi) continue;
      for (auto [f, k] : o.psi) cur.dec.psi[f] += k;
      for (auto [s, k] : o.amb) amb.e[s] += k;
      rec(idx + 1, c * o.c, deg + o.deg, t + o.t);
      for (auto [f, k] : o.psi) cur.dec.psi[f] -= k;
      for (auto [s, k] : o.amb) amb.e[s] -= k;
    }
  };
  rec(0, weight, 0, 0);
}

Factor lambda_factor(const Rational& c, int budget) {
  Factor f;
  Rational p = 1;
  for (int k = 0; k <= budget; ++k) {
    f.push_back({p / factorial(k), k, k, {}, {{0, k}}});
    p *= c;
  }
  return f;
}

// (1 - e^{b t x}) / x with x = psi_h + psi_h'; coefficient of t^j is -b^j x^{j-1} / j!.
Factor edge_series(int h, int hp, const Rational& b, int budget) {
  Factor f;
  Rational bj = b;
  for (int j = 1; j <= budget + 1; ++j) {
    for (int a = 0; a < j; ++a)
      f.push_back({-bj / factorial(j) * binomial(Rational(j - 1), a), j - 1, j, {{h, a}, {hp, j - 1 - a}}, {}});
    bj *= b;
  }
  return f;
}

Factor omega_leg(int marking, const Rational& a) {
  return {{Rational(1), 0, 0, {}, {}}, {a, 1, 0, {}, {{marking, 1}}}};
}

Factor psi_leg_exponential(int flag, const Rational& a, int budget) {
  Factor f;
  Rational p = 1;
  for (int m = 0; m <= budget; ++m) {
    f.push_back({p / factorial(m), m, 0, {{flag, m}}, {}});
    p *= a;
  }
  return f;
}

// prod_{legs of T} (1 + 3 omega_T) prod_{E2 edges of T} 1/(psi_h - (1 + 3 omega_T)),
// expanded as (-1)^r prod psi_h^{k_e} (1 + 3 omega_T)^{|L_T| - sum(k_e + 1)}.
Factor tree_factor(const std::vector<int>& hflags, int legs, int rep, int budget) {
  Factor f;
  const int r = static_cast<int>(hflags.size());
  std::vector<int> k(r, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == r) {
      int m = legs - used - r;
      Rational sign = (r % 2) ? -1 : 1;
      Rational three = 1;
      for (int p = 0; used + p <= budget; ++p) {
        Option o{sign * binomial(Rational(m), p) * three, used + p, 0, {}, {}};
        for (int e = 0; e < r; ++e)
          if (k[e]) o.psi.push_back({hflags[e], k[e]});
        if (p) o.amb.push_back({rep, p});
        if (o.c != 0) f.push_back(std::move(o));
        three *= 3;
      }
      return;
    }
    for (k[i] = 0; used + k[i] <= budget; ++k[i]) rec(i + 1, used + k[i]);
    k[i] = 0;
  };
  rec(0, 0);
  return f;
}

Factor hodge_delta_power(int slot, int budget) {
  Factor f;
  for (int j = 0; j <= budget; ++j) f.push_back({Rational(1), j, 0, {}, {{slot, j}}});
  return f;
}

enum class Shape { CompactType, Tilde, RationalTails };

// One graph of the hyperelliptic graph sums.
void hyp_graph(const GraphEntry& e, int n, Shape shape, Buckets& out) {
  const Graph& gr = e.graph;
  const int budget = n - gr.num_edges();
  if (budget < 0) return;
  CoreData cd = core_and_outward(gr);
  EdgeClass ec = classify_edges(gr);
  const int V = gr.num_vertices();

  // external rational trees: components of the non-core vertices
  std::vector<int> comp(V, -1);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (int k = 0; k < gr.num_edges(); ++k) {
    const Edge& ed = gr.edges[k];
    if (!cd.core_vertex[ed.u] && !cd.core_vertex[ed.v]) comp[find(ed.u)] = find(ed.v);
  }
  std::map<int, std::vector<int>> tree_h;
  std::map<int, std::vector<int>> tree_legs;
  for (int k = 0; k < gr.num_edges(); ++k) {
    if (ec.kind[k] != EdgeKind::E2) continue;
    int v = gr.flag_vertex(ec.h[k]);
    if (cd.core_vertex[v]) throw std::logic_error("hyp_graph: E2 edge inside the core");
    tree_h[find(v)].push_back(ec.h[k]);
  }

  std::vector<Factor> factors;
  for (const auto& leg : gr.legs) {
    if (cd.core_vertex[leg.vertex])
      factors.push_back(omega_leg(leg.marking, 3));
    else
      tree_legs[find(leg.vertex)].push_back(leg.marking);
  }
  for (const auto& [root, hs] : tree_h) {
    const auto& ls = tree_legs[root];
    int rep = *std::min_element(ls.begin(), ls.end());
    factors.push_back(tree_factor(hs, static_cast<int>(ls.size()), rep, budget));
  }
  if (shape == Shape::RationalTails) {
    factors.push_back(hodge_delta_power(n + 1, budget));
  } else {
    factors.push_back(lambda_factor(-1, budget));
    for (int k = 0; k < gr.num_edges(); ++k)
      if (ec.kind[k] == EdgeKind::E1)
        factors.push_back(edge_series(gr.edge_flag(k, 0), gr.edge_flag(k, 1), 1, budget));
  }
  Rational w = Rational(1, e.aut);
  if (shape == Shape::Tilde && gr.h1() % 2) w = -w;
  expand(gr, 2, n, factors, budget, budget, shape != Shape::RationalTails, w, out);
}

// Products of ambient classes, cached per (g, n, exponents).
const TautClass& ambient_class(int g, int n, const std::vector<int>& e) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>, TautClass> cache;
  auto key = std::make_tuple(g, n, e);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TautClass value = TautClass::fundamental(g, n);
  std::size_t s = 0;
  while (s < e.size() && e[s] == 0) ++s;
  if (s < e.size()) {
    auto rest = e;
    --rest[s];
    TautClass factor;
    if (s == 0)
      factor = lambda_class(g, n);
    else if (s + 1 == e.size())
      factor = -(lambda_class(g, n) + delta_1(g, n));
    else
      factor = omega_class(g, n, static_cast<int>(s));
    value = multiply(ambient_class(g, n, rest), factor);
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

TautClass collect(int g, int n, const Buckets& b) {
  TautClass out(g, n);
  for (const auto& [e, cls] : b) {
    bool trivial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (trivial)
      out += cls;
    else
      out += multiply(ambient_class(g, n, e), cls);
  }
  return out;
}

// Process-wide memo for the expensive constructors.
template <class F>
TautClass memo(const std::string& name, int n, F compute) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, TautClass> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({name, n});
    if (it != cache.end()) return it->second;
  }
  TautClass v = compute();
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(name, n), std::move(v)).first->second;
}

TautClass hyp_graph_sum(int n, Shape shape) {
  Buckets b;
  for (int edges = 0; edges <= n; ++edges) {
    for (const auto& e : graphs_with_edges(2, n, edges)) {
      bool keep = false;
      switch (shape) {
        case Shape::CompactType: keep = is_compact_type(e.graph); break;
        case Shape::RationalTails: keep = has_rational_tails_shape(e.graph); break;
        case Shape::Tilde: keep = is_in_G_tilde(e.graph); break;
      }
      if (keep) hyp_graph(e, n, shape, b);
    }
  }
  return collect(2, n, b).degree_part(n);
}

}  // namespace

TautClass pixton_exponential(int g, int n, const std::vector<Rational>& a, const Rational& c, const Rational& b,
                             int max_degree) {
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("pixton_exponential: one a_i per marking");
  const int dim = 3 * g - 3 + n;
  max_degree = std::min(max_degree, dim);
  Buckets buckets;
  for (int edges = 0; edges <= max_degree; ++edges) {
    for (const auto& e : graphs_with_edges(g, n, edges)) {
      const Graph& gr = e.graph;
      int budget = max_degree - edges;
      std::vector<Factor> factors;
      for (int i = 0; i < gr.num_legs(); ++i)
        factors.push_back(psi_leg_exponential(i, a[gr.legs[i].marking - 1], budget));
      factors.push_back(lambda_factor(c, budget));
      for (int k = 0; k < gr.num_edges(); ++k)
        factors.push_back(edge_series(gr.edge_flag(k, 0), gr.edge_flag(k, 1), b, budget));
      // without t-weighting the t-exponent is irrelevant; every degree up to the cap is kept
      expand(gr, g, n, factors, 0, budget, false, Rational(1, e.aut), buckets);
    }
  }
  TautClass out = collect(g, n, buckets);
  TautClass trimmed(g, n);
  for (int d = 0; d <= max_degree; ++d) trimmed += out.degree_part(d);
  return trimmed;
}

TautClass prod_formula(int g, int n, const Rational& a, const Rational& c, const Rational& b) {
  if (g < 1) throw std::invalid_argument("prod_formula: genus must be positive");
  Buckets buckets;
  for (int edges = 0; edges <= n; ++edges) {
    for (const auto& e : graphs_with_edges(g, n, edges)) {
      const Graph& gr = e.graph;
      if (!has_no_rational_tails(gr)) continue;
      int budget = n - edges;
      std::vector<Factor> factors;
      for (const auto& leg : gr.legs) factors.push_back(omega_leg(leg.marking, a));
      factors.push_back(lambda_factor(c, budget));
      for (int k = 0; k < gr.num_edges(); ++k)
        factors.push_back(edge_series(gr.edge_flag(k, 0), gr.edge_flag(k, 1), b, budget));
      expand(gr, g, n, factors, budget, budget, true, Rational(1, e.aut), buckets);
    }
  }
  return collect(g, n, buckets).degree_part(n);
}

TautClass hyp_ct_formula(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("hyp_ct_formula: 1 <= n <= 7");
  return memo("ct", n, [&] { return hyp_graph_sum(n, Shape::CompactType); });
}

TautClass hyp_rt_formula(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("hyp_rt_formula: 1 <= n <= 6");
  return memo("rt", n, [&] { return hyp_graph_sum(n, Shape::RationalTails); });
}

TautClass hyp_tilde_formula(int n, bool experimental) {
  int cap = experimental ? 6 : 4;
  if (n < 1 || n > cap)
    throw std::invalid_argument(experimental ? "hyp_tilde_formula: 1 <= n <= 6"
                                             : "hyp_tilde_formula: 1 <= n <= 4 (n = 5, 6 are experimental)");
  return memo("tilde", n, [&] { return hyp_graph_sum(n, Shape::Tilde); });
}

TautClass hyp_graph_contribution(const Graph& graph, bool tilde) {
  auto c = canonical_graph(graph);
  Buckets b;
  const int n = graph.num_legs();
  hyp_graph(GraphEntry{c.key, c.graph, c.aut}, n, tilde ? Shape::Tilde : Shape::CompactType, b);
  return collect(2, n, b).degree_part(n);
}

TautClass weierstrass_divisor(int n, int i) {
  return Rational(3) * omega_class(2, n, i) - lambda_class(2, n) - delta_1(2, n);
}

TautClass place_markings(const TautClass& a, const std::vector<int>& markings, int n) {
  const int m = a.n();
  if (static_cast<int>(markings.size()) != m) throw std::invalid_argument("place_markings: size mismatch");
  TautClass p = a;
  while (p.n() < n) p = pullback_forget(p);
  std::vector<int> perm(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  for (int k = 0; k < m; ++k) {
    perm[k + 1] = markings[k];
    used[markings[k]] = true;
  }
  int next = m + 1;
  for (int x = 1; x <= n; ++x)
    if (!used[x]) perm[next++] = x;
  return relabel(p, perm);
}

namespace {

// Hyp_{2,I} on (2, n) times a drawn stratum.
TautClass hyp_times(const std::vector<int>& I, int n, const TautClass& stratum) {
  if (I.empty()) return stratum;
  return multiply(place_markings(hyp_recursive(static_cast<int>(I.size())), I, n), stratum);
}

std::vector<int> complement(int n, const std::vector<int>& used) {
  std::vector<int> out;
  for (int x = 1; x <= n; ++x)
    if (std::find(used.begin(), used.end(), x) == used.end()) out.push_back(x);
  return out;
}

// Ordered tuples of distinct elements of 1..m.
void ordered_tuples(int m, int size, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == size) {
      f(cur);
      return;
    }
    for (int x = 1; x <= m; ++x) {
      if (std::find(cur.begin(), cur.end(), x) != cur.end()) continue;
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

// Cycle through the elliptic vertex 0 and rational vertices 1..r carrying `legs`.
Drawn cycle(const std::vector<std::vector<int>>& rational_legs, int elliptic_legs) {
  Drawn d;
  d.genus.push_back(1);
  d.legs.push_back(std::vector<int>(elliptic_legs, 0));
  const int r = static_cast<int>(rational_legs.size());
  for (int v = 1; v <= r; ++v) {
    d.genus.push_back(0);
    d.legs.push_back(rational_legs[v - 1]);
  }
  if (r == 1) {
    d.edges = {{0, 1}, {0, 1}};
  } else {
    for (int v = 0; v < r; ++v) d.edges.push_back({v, v + 1});
    d.edges.push_back({r, 0});
  }
  return d;
}

TautClass compute_phigamma(int n) {
  TautClass out(2, n);
  // block with b indices from [n-1]; rational legs b+1
  auto block = [&](int b, const Rational& coeff, const std::function<std::vector<std::pair<Rational, Drawn>>(
                                                     const std::vector<int>&)>& pictures) {
    if (b > n - 1) return;
    ordered_tuples(n - 1, b, [&](const std::vector<int>& idx) {
      auto used = idx;
      used.push_back(n);
      auto I = complement(n, used);
      TautClass sum(2, n);
      for (const auto& [c, d] : pictures(idx)) sum += c * drawn(n, d);
      out += coeff * hyp_times(I, n, sum);
    });
  };
  // unlabeled legs on the elliptic vertex; drawn() fills in the markings
  auto ell = [&](int b) { return n - 1 - b; };
  block(1, 1, [&](const std::vector<int>& x) {
    return std::vector<std::pair<Rational, Drawn>>{{1, cycle({{x[0], n}}, ell(1))}};
  });
  block(2, Rational(-1, 2), [&](const std::vector<int>& x) {
    int i = x[0], j = x[1];
    return std::vector<std::pair<Rational, Drawn>>{{1, cycle({{j}, {i, n}}, ell(2))}};
  });
  block(3, Rational(1, 2), [&](const std::vector<int>& x) {
    int i = x[0], j = x[1], k = x[2];
    return std::vector<std::pair<Rational, Drawn>>{{1, cycle({{j}, {n, i}, {k}}, ell(3))}};
  });
  block(4, Rational(1, 4), [&](const std::vector<int>& x) {
    int i = x[0], j = x[1], k = x[2], l = x[3];
    return std::vector<std::pair<Rational, Drawn>>{{1, cycle({{l}, {k}, {j}, {i, n}}, ell(4))},
                                                   {-3, cycle({{k}, {j}, {n, i}, {l}}, ell(4))}};
  });
  block(5, Rational(1, 4), [&](const std::vector<int>& x) {
    int i = x[0], j = x[1], k = x[2], l = x[3], m = x[4];
    return std::vector<std::pair<Rational, Drawn>>{{3, cycle({{k}, {j}, {n, i}, {m}, {l}}, ell(5))},
                                                   {-1, cycle({{m}, {l}, {k}, {j}, {i, n}}, ell(5))}};
  });
  return out;
}

}  // namespace

TautClass phigamma(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("phigamma: 2 <= n <= 6");
  return memo("phigamma", n, [&] { return compute_phigamma(n); });
}

TautClass hyp_recursive(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("hyp_recursive: 1 <= n <= 6");
  return memo("hyp-rec", n, [&] {
    if (n == 1) return weierstrass_divisor(1, 1);
    TautClass prev = hyp_recursive(n - 1);
    TautClass out = multiply(pullback_forget(prev), weierstrass_divisor(n, n));
    for (int i = 1; i < n; ++i) out -= section_pushforward(prev, i);
    out -= phigamma(n);
    return out;
  });
}

TautClass nct_recursive(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("nct_recursive: 2 <= n <= 6");
  return memo("nct-rec", n, [&] {
    if (n == 2) return -phigamma(2);
    TautClass prev = nct_recursive(n - 1);
    TautClass out = multiply(pullback_forget(prev), weierstrass_divisor(n, n));
    for (int i = 1; i < n; ++i) out -= section_pushforward(prev, i);
    out -= phigamma(n);
    return out;
  });
}

}  // namespace strata
