#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "strata/graphs.hpp"

namespace strata {

namespace {

// Vertices reachable from start without using edge `skip`.
std::vector<bool> reach(const Graph& g, int start, int skip, const std::vector<bool>* allowed = nullptr) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int k = 0; k < g.num_edges(); ++k) {
      if (k == skip || (allowed && !(*allowed)[k])) continue;
      const Edge& e = g.edges[k];
      int y = e.u == x ? e.v : (e.v == x ? e.u : -1);
      if (y >= 0 && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

int side_genus(const Graph& g, const std::vector<bool>& side, int skip) {
  int gen = 0, nv = 0, ne = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (side[v]) {
      gen += g.genus[v];
      ++nv;
    }
  for (int k = 0; k < g.num_edges(); ++k)
    if (k != skip && side[g.edges[k].u]) ++ne;
  return gen + ne - nv + 1;
}

std::vector<int> edge_degree(const Graph& g) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool trivalent_rational(const Graph& g, const std::vector<int>& val, int v) {
  return g.genus[v] == 0 && val[v] == 3;
}

}  // namespace

bool is_compact_type(const Graph& g) { return g.h1() == 0; }

bool has_rational_tails_shape(const Graph& g) {
  if (!is_compact_type(g)) return false;
  int tg = g.total_genus();
  return std::any_of(g.genus.begin(), g.genus.end(), [&](int x) { return x == tg; });
}

bool has_no_rational_tails(const Graph& g) {
  if (!is_compact_type(g)) return false;
  if (g.num_vertices() == 1) return true;
  auto deg = edge_degree(g);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (deg[v] == 1 && g.genus[v] == 0) return false;
  return true;
}

std::vector<bool> disconnecting_edges(const Graph& g) {
  std::vector<bool> out(g.num_edges(), false);
  for (int k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edges[k];
    if (e.u == e.v) continue;
    out[k] = !reach(g, e.u, k)[e.v];
  }
  return out;
}

EdgeClass classify_edges(const Graph& g) {
  if (g.total_genus() != 2) throw std::invalid_argument("classify_edges: genus must be 2");
  EdgeClass c;
  c.kind.assign(g.num_edges(), EdgeKind::NonDisconnecting);
  c.h.assign(g.num_edges(), -1);
  c.hprime.assign(g.num_edges(), -1);
  auto disc = disconnecting_edges(g);
  for (int k = 0; k < g.num_edges(); ++k) {
    if (!disc[k]) continue;
    auto side_u = reach(g, g.edges[k].u, k);
    int gu = side_genus(g, side_u, k);
    if (gu == 1) {
      c.kind[k] = EdgeKind::E1;
    } else {
      c.kind[k] = EdgeKind::E2;
      // h sits on the rational side and points towards genus 2
      bool u_rational = gu == 0;
      c.h[k] = g.edge_flag(k, u_rational ? 0 : 1);
      c.hprime[k] = g.edge_flag(k, u_rational ? 1 : 0);
    }
  }
  return c;
}

CoreData core_and_outward(const Graph& g) {
  int V = g.num_vertices(), E = g.num_edges();
  CoreData cd;
  cd.core_vertex.assign(V, true);
  cd.core_edge.assign(E, true);
  if (g.total_genus() > 0) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> deg(V, 0);
      for (int k = 0; k < E; ++k)
        if (cd.core_edge[k]) {
          ++deg[g.edges[k].u];
          ++deg[g.edges[k].v];
        }
      for (int v = 0; v < V; ++v) {
        if (!cd.core_vertex[v] || g.genus[v] > 0 || deg[v] > 1) continue;
        cd.core_vertex[v] = false;
        for (int k = 0; k < E; ++k)
          if (cd.core_edge[k] && (g.edges[k].u == v || g.edges[k].v == v)) cd.core_edge[k] = false;
        changed = true;
        break;
      }
    }
  }
  // root flag of each vertex: the flag at the core of the edge leading to it
  std::vector<int> root(V, -1);
  std::vector<int> frontier;
  for (int v = 0; v < V; ++v)
    if (cd.core_vertex[v]) frontier.push_back(v);
  std::vector<bool> done = cd.core_vertex;
  cd.outward.assign(g.num_flags(), false);
  cd.w.assign(g.num_flags(), -1);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int k = 0; k < E; ++k) {
        if (cd.core_edge[k]) continue;
        const Edge& e = g.edges[k];
        int side = e.u == x ? 0 : (e.v == x ? 1 : -1);
        if (side < 0) continue;
        int y = side == 0 ? e.v : e.u;
        if (done[y]) continue;
        done[y] = true;
        int f = g.edge_flag(k, side);
        cd.outward[f] = true;
        root[y] = cd.core_vertex[x] ? f : root[x];
        cd.w[f] = cd.core_vertex[x] ? f : root[x];
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  for (int i = 0; i < g.num_legs(); ++i) {
    int v = g.legs[i].vertex;
    cd.outward[i] = true;
    cd.w[i] = cd.core_vertex[v] ? i : root[v];
  }
  return cd;
}

bool tilde_condition_i(const Graph& g) {
  for (const auto& e : g.edges)
    if (e.u == e.v) return false;
  return true;
}

bool tilde_condition_ii(const Graph& g) {
  auto disc = disconnecting_edges(g);
  int nd = 0;
  std::set<int> verts;
  for (int k = 0; k < g.num_edges(); ++k)
    if (!disc[k]) {
      ++nd;
      verts.insert(g.edges[k].u);
      verts.insert(g.edges[k].v);
    }
  return nd != 3 || verts.size() >= 3;
}

// Adjacency in the third condition is read through disconnecting edges; with
// plain adjacency the third to sixth excluded examples would be admitted.
bool tilde_condition_iii(const Graph& g) {
  auto disc = disconnecting_edges(g);
  auto val = g.valences();
  for (int v = 0; v < g.num_vertices(); ++v) {
    bool on_cycle = false;
    for (int k = 0; k < g.num_edges(); ++k)
      if (!disc[k] && (g.edges[k].u == v || g.edges[k].v == v)) on_cycle = true;
    if (!on_cycle) continue;
    auto comp = reach(g, v, -1, &disc);
    bool elliptic = false;
    for (int u = 0; u < g.num_vertices(); ++u)
      if (comp[u] && g.genus[u] == 1) elliptic = true;
    if (elliptic) continue;
    if (!trivalent_rational(g, val, v)) continue;
    bool ok = false;
    for (int k = 0; k < g.num_edges(); ++k) {
      if (!disc[k]) continue;
      const Edge& e = g.edges[k];
      int u = e.u == v ? e.v : (e.v == v ? e.u : -1);
      if (u >= 0 && !trivalent_rational(g, val, u)) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

bool tilde_condition_iv(const Graph& g) {
  auto disc = disconnecting_edges(g);
  auto val = g.valences();
  auto deg = edge_degree(g);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.genus[v] != 0) continue;
    bool on_cycle = false;
    std::set<int> nbrs;
    for (int k = 0; k < g.num_edges(); ++k) {
      const Edge& e = g.edges[k];
      if (e.u != v && e.v != v) continue;
      if (!disc[k]) on_cycle = true;
      int u = e.u == v ? e.v : e.u;
      if (u != v) nbrs.insert(u);
    }
    if (!on_cycle) continue;
    int external = 0;
    for (int u : nbrs)
      if (deg[u] == 1 && trivalent_rational(g, val, u)) ++external;
    if (external >= 2) return false;
  }
  return true;
}

bool is_in_G_tilde(const Graph& g) {
  return tilde_condition_i(g) && tilde_condition_ii(g) && tilde_condition_iii(g) &&
         tilde_condition_iv(g);
}

std::vector<GraphEntry> expand_partial_labels(const Graph& tmpl, const std::vector<int>& markings) {
  std::vector<int> free_legs;
  for (int i = 0; i < tmpl.num_legs(); ++i)
    if (tmpl.legs[i].marking == 0) free_legs.push_back(i);
  if (free_legs.size() > markings.size()) return {};
  if (free_legs.size() < markings.size())
    throw std::invalid_argument("expand_partial_labels: more markings than unmarked legs");
  std::vector<int> m = markings;
  std::sort(m.begin(), m.end());
  std::map<std::string, GraphEntry> found;
  do {
    Graph h = tmpl;
    for (std::size_t i = 0; i < free_legs.size(); ++i) h.legs[free_legs[i]].marking = m[i];
    auto c = canonicalize(DecGraph::bare(h), false);
    if (!found.count(c.key)) found.emplace(c.key, GraphEntry{c.key, decode_key(c.key).graph, c.aut});
  } while (std::next_permutation(m.begin(), m.end()));
  std::vector<GraphEntry> out;
  for (auto& [k, e] : found) out.push_back(std::move(e));
  return out;
}

}  // namespace strata
