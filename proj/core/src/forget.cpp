#include <stdexcept>

#include "strata/algebra.hpp"

namespace strata {

namespace {

// Copy of g with a leg of marking m appended at vertex v; edge flags shift by one.
DecGraph with_new_leg(const DecGraph& d, int v, int m) {
  const Graph& g = d.graph;
  DecGraph out;
  out.graph.genus = g.genus;
  out.graph.legs = g.legs;
  out.graph.legs.push_back({v, m});
  out.graph.edges = g.edges;
  out.dec.kappa = d.dec.kappa;
  out.dec.psi.assign(out.graph.num_flags(), 0);
  for (int f = 0; f < g.num_flags(); ++f) out.dec.psi[f < g.num_legs() ? f : f + 1] = d.dec.psi[f];
  return out;
}

// Moves flag f of d onto a new genus-0 bubble together with leg `leg`;
// the bubble hangs off f's old vertex. Returns the flag at the old vertex.
int bubble(DecGraph& d, int f, int leg) {
  Graph& g = d.graph;
  int v = g.flag_vertex(f);
  int w = g.add_vertex(0);
  d.dec.kappa.emplace_back();
  g.set_flag_vertex(f, w);
  g.set_flag_vertex(leg, w);
  g.add_edge(v, w);
  d.dec.psi.push_back(0);
  d.dec.psi.push_back(0);
  return g.edge_flag(g.num_edges() - 1, 0);
}

}  // namespace

TautClass pullback_forget(const TautClass& a) {
  const int m = a.n() + 1;
  TautClass out(a.g(), m);
  for (const auto& [key, c] : a.terms()) {
    DecGraph d = decode_key(key);
    const Graph& g = d.graph;
    for (int v = 0; v < g.num_vertices(); ++v) {
      DecGraph base = with_new_leg(d, v, m);
      const int leg = g.num_legs();  // index of the new leg
      // kappa factors at v: each either stays or becomes -psi_m^a
      const auto& ks = d.dec.kappa[v];
      const int nk = static_cast<int>(ks.size());
      for (int mask = 0; mask < (1 << nk); ++mask) {
        DecGraph t = base;
        t.dec.kappa[v].clear();
        int sign = 1;
        for (int j = 0; j < nk; ++j) {
          if (mask & (1 << j)) {
            t.dec.psi[leg] += ks[j];
            sign = -sign;
          } else {
            t.dec.kappa[v].push_back(ks[j]);
          }
        }
        out.add(t, c * sign);
      }
      // corrections: psi_h^k -> - D_{h,m} psi_b^{k-1}
      for (int f = 0; f < base.graph.num_flags(); ++f) {
        if (f == leg || base.graph.flag_vertex(f) != v || base.dec.psi[f] == 0) continue;
        DecGraph t = base;
        int k = t.dec.psi[f];
        t.dec.psi[f] = 0;
        int b = bubble(t, f, leg);
        t.dec.psi[b] = k - 1;
        out.add(t, -c);
      }
    }
  }
  return out;
}

TautClass pushforward_forget(const TautClass& a) {
  const int m = a.n();
  if (m < 1 || 2 * a.g() - 2 + (m - 1) <= 0) throw std::invalid_argument("pushforward to an unstable space");
  TautClass out(a.g(), m - 1);
  for (const auto& [key, c] : a.terms()) {
    DecGraph d = decode_key(key);
    const Graph& g = d.graph;
    int leg = g.leg_with_marking(m);
    if (leg < 0) throw std::invalid_argument("pushforward_forget: marking missing");
    int v = g.legs[leg].vertex;
    int gv = g.genus[v];
    int valv = g.valence(v);

    // graph without the leg; flags above `leg` shift down by one
    auto remove_leg = [&](const DecGraph& src) {
      DecGraph r;
      r.graph.genus = src.graph.genus;
      for (int i = 0; i < src.graph.num_legs(); ++i)
        if (i != leg) r.graph.legs.push_back(src.graph.legs[i]);
      r.graph.edges = src.graph.edges;
      r.dec.kappa = src.dec.kappa;
      for (int f = 0; f < src.graph.num_flags(); ++f)
        if (f != leg) r.dec.psi.push_back(src.dec.psi[f]);
      return r;
    };
    auto new_index = [&](int f) { return f < leg ? f : f - 1; };

    if (2 * gv - 2 + valv - 1 > 0) {
      DecGraph base = remove_leg(d);
      int b = d.dec.psi[leg];
      const auto& ks = d.dec.kappa[v];
      const int nk = static_cast<int>(ks.size());
      const int kappa0 = 2 * gv - 2 + valv - 1;
      for (int mask = 0; mask < (1 << nk); ++mask) {
        int s = b;
        std::vector<int> rest;
        for (int j = 0; j < nk; ++j) {
          if (mask & (1 << j))
            s += ks[j];
          else
            rest.push_back(ks[j]);
        }
        if (s < 1) continue;
        DecGraph t = base;
        t.dec.kappa[v] = rest;
        Rational cc = c;
        if (s - 1 == 0)
          cc *= kappa0;
        else
          t.dec.kappa[v].push_back(s - 1);
        std::sort(t.dec.kappa[v].begin(), t.dec.kappa[v].end());
        out.add(t, cc);
      }
      if (b == 0) {
        for (int f = 0; f < g.num_flags(); ++f) {
          if (f == leg || g.flag_vertex(f) != v || d.dec.psi[f] == 0) continue;
          DecGraph t = base;
          --t.dec.psi[new_index(f)];
          out.add(t, c);
        }
      }
      continue;
    }

    // v is a genus-0 vertex with exactly two other flags: contract it
    if (d.dec.psi[leg] != 0 || !d.dec.kappa[v].empty()) continue;
    std::vector<int> others;
    for (int f = 0; f < g.num_flags(); ++f)
      if (f != leg && g.flag_vertex(f) == v) others.push_back(f);
    bool skip = false;
    for (int f : others) skip = skip || d.dec.psi[f] != 0;
    if (skip) continue;
    int f1 = others[0], f2 = others[1];
    if (g.is_leg(f1) && g.is_leg(f2)) throw std::invalid_argument("pushforward to an unstable space");
    DecGraph r;
    std::vector<int> vnew(g.num_vertices(), -1);
    for (int u = 0; u < g.num_vertices(); ++u) {
      if (u == v) continue;
      vnew[u] = r.graph.add_vertex(g.genus[u]);
      r.dec.kappa.push_back(d.dec.kappa[u]);
    }
    std::vector<int> psi_leg, psi_edge;
    for (int i = 0; i < g.num_legs(); ++i) {
      if (i == leg) continue;
      int vertex = g.legs[i].vertex;
      int p = d.dec.psi[i];
      if (vertex == v) {
        // the leg replaces the half-edge on the far side of the other flag
        int other = f1 == i ? f2 : f1;
        int partner = g.other_flag(other);
        vertex = g.flag_vertex(partner);
        p = d.dec.psi[partner];
      }
      r.graph.add_leg(vnew[vertex], g.legs[i].marking);
      psi_leg.push_back(p);
    }
    for (int k = 0; k < g.num_edges(); ++k) {
      const Edge& e = g.edges[k];
      if (e.u == v || e.v == v) continue;
      r.graph.add_edge(vnew[e.u], vnew[e.v]);
      psi_edge.push_back(d.dec.psi[g.edge_flag(k, 0)]);
      psi_edge.push_back(d.dec.psi[g.edge_flag(k, 1)]);
    }
    if (!g.is_leg(f1) && !g.is_leg(f2)) {
      int p1 = g.other_flag(f1), p2 = g.other_flag(f2);
      r.graph.add_edge(vnew[g.flag_vertex(p1)], vnew[g.flag_vertex(p2)]);
      psi_edge.push_back(d.dec.psi[p1]);
      psi_edge.push_back(d.dec.psi[p2]);
    }
    r.dec.psi = psi_leg;
    r.dec.psi.insert(r.dec.psi.end(), psi_edge.begin(), psi_edge.end());
    out.add(r, c);
  }
  return out;
}

TautClass rational_tail_divisor(int g, int n, const std::vector<int>& s) {
  Graph gr;
  gr.add_vertex(g);
  gr.add_vertex(0);
  std::vector<bool> in(n + 1, false);
  for (int i : s) {
    if (i < 1 || i > n) throw std::invalid_argument("rational_tail_divisor: marking out of range");
    in[i] = true;
  }
  for (int i = 1; i <= n; ++i) gr.add_leg(in[i] ? 1 : 0, i);
  gr.add_edge(0, 1);
  validate(gr);
  return TautClass::stratum(gr);
}

TautClass section_pushforward(const TautClass& a, int i) {
  if (i < 1 || i > a.n()) throw std::invalid_argument("section_pushforward: index out of range");
  return multiply(pullback_forget(a), rational_tail_divisor(a.g(), a.n() + 1, {i, a.n() + 1}));
}

}  // namespace strata
