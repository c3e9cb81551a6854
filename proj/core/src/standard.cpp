#include <regex>
#include <stdexcept>

#include "strata/algebra.hpp"
#include "strata/graphs.hpp"

namespace strata {

namespace {

Graph smooth(int g, int n) {
  Graph gr;
  gr.add_vertex(g);
  for (int i = 1; i <= n; ++i) gr.add_leg(0, i);
  return gr;
}

TautClass pull_to(TautClass a, int n) {
  while (a.n() < n) a = pullback_forget(a);
  return a;
}

// Sum over one-edge graphs accepted by pred, each weighted by 1/|Aut|.
template <class Pred>
TautClass divisor_sum(int g, int n, Pred pred) {
  TautClass out(g, n);
  for (const auto& e : graphs_with_edges(g, n, 1))
    if (pred(e.graph)) out.add(DecGraph::bare(e.graph), Rational(1, e.aut));
  return out;
}

}  // namespace

TautClass psi_class(int g, int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("psi: marking out of range");
  DecGraph d = DecGraph::bare(smooth(g, n));
  d.dec.psi[i - 1] = 1;
  return TautClass::stratum(d);
}

TautClass kappa_class(int g, int n, int a) {
  if (a < 1) throw std::invalid_argument("kappa: index must be positive");
  DecGraph d = DecGraph::bare(smooth(g, n));
  d.dec.kappa[0].push_back(a);
  TautClass out(g, n);
  out.add(d, 1);
  return out;
}

TautClass omega_class(int g, int n, int i) {
  if (g < 1) throw std::invalid_argument("omega: needs genus >= 1");
  if (i < 1 || i > n) throw std::invalid_argument("omega: marking out of range");
  TautClass p = pull_to(psi_class(g, 1, 1), n);
  std::vector<int> perm(n + 1, 0);
  perm[1] = i;
  int next = 1;
  for (int m = 2; m <= n; ++m) {
    if (next == i) ++next;
    perm[m] = next++;
  }
  return relabel(p, perm);
}

TautClass delta_irr(int g, int n) {
  TautClass out(g, n);
  if (g < 1) return out;
  Graph gr = smooth(g - 1, n);
  gr.add_edge(0, 0);
  out.add(DecGraph::bare(gr), Rational(1, 2));
  return out;
}

// Pulled back from M_2-bar: every split into two genus-one vertices.
TautClass delta_1(int g, int n) {
  if (g != 2) throw std::invalid_argument("delta_1: defined in genus 2");
  return divisor_sum(g, n, [](const Graph& gr) {
    return gr.num_vertices() == 2 && gr.genus[0] == 1 && gr.genus[1] == 1;
  });
}

TautClass delta_total(int g, int n) {
  return divisor_sum(g, n, [](const Graph&) { return true; });
}

TautClass delta_nrt(int g, int n) {
  return divisor_sum(g, n, [](const Graph& gr) {
    return gr.num_vertices() == 2 && gr.genus[0] > 0 && gr.genus[1] > 0;
  });
}

TautClass lambda_class(int g, int n) {
  if (g == 0) return TautClass(g, n);
  if (g == 1) {
    if (n < 1) throw std::invalid_argument("lambda: (1,0) is not stable");
    return pull_to(psi_class(1, 1, 1), n);
  }
  if (g == 2) {
    // 10 lambda = delta_irr + 2 delta_1 on M_2-bar
    TautClass base = Rational(1, 10) * delta_irr(2, 0) + Rational(1, 5) * delta_1(2, 0);
    return pull_to(base, n);
  }
  throw std::invalid_argument("lambda: genus >= 3 is not supported");
}

TautClass standard_class(const std::string& name, int g, int n) {
  static const std::regex indexed(R"((psi|omega|kappa)\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, indexed)) {
    int i = std::stoi(m[2]);
    if (m[1] == "psi") return psi_class(g, n, i);
    if (m[1] == "omega") return omega_class(g, n, i);
    return kappa_class(g, n, i);
  }
  if (name == "lambda") return lambda_class(g, n);
  if (name == "delta_1") return delta_1(g, n);
  if (name == "delta_irr") return delta_irr(g, n);
  if (name == "delta_total") return delta_total(g, n);
  if (name == "delta_nrt") return delta_nrt(g, n);
  throw std::invalid_argument("unknown standard class: " + name);
}

}  // namespace strata
