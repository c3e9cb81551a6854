#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "strata/algebra.hpp"
#include "strata/graphs.hpp"

namespace strata {

std::vector<GraphGroup> group_by_graph(const TautClass& a) {
  std::map<std::string, GraphGroup> groups;
  for (const auto& [key, c] : a.terms()) {
    DecGraph d = decode_key(key);
    auto cm = canonicalize(DecGraph::bare(d.graph), true);
    Decoration dec = Decoration::trivial(d.graph);
    for (int f = 0; f < d.graph.num_flags(); ++f) dec.psi[cm.flag_map[f]] = d.dec.psi[f];
    for (int v = 0; v < d.graph.num_vertices(); ++v) dec.kappa[cm.vertex_map[v]] = d.dec.kappa[v];
    auto it = groups.find(cm.key);
    if (it == groups.end()) it = groups.emplace(cm.key, GraphGroup{cm.key, decode_key(cm.key).graph, {}}).first;
    it->second.terms.emplace_back(std::move(dec), c);
  }
  std::vector<GraphGroup> out;
  out.reserve(groups.size());
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

namespace {

std::vector<Automorphism> compute_automorphisms(const Graph& a) {
  int V = a.num_vertices(), L = a.num_legs();
  std::vector<std::vector<int>> mult(V, std::vector<int>(V, 0));
  for (const auto& e : a.edges) {
    ++mult[e.u][e.v];
    if (e.u != e.v) ++mult[e.v][e.u];
  }
  std::vector<std::vector<int>> marks(V);
  for (const auto& l : a.legs) marks[l.vertex].push_back(l.marking);
  for (auto& m : marks) std::sort(m.begin(), m.end());
  for (const auto& m : marks)
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
      throw std::invalid_argument("automorphisms: repeated markings");
  auto val = a.valences();

  // edges grouped by their unordered endpoint pair
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int k = 0; k < a.num_edges(); ++k)
    groups[{std::min(a.edges[k].u, a.edges[k].v), std::max(a.edges[k].u, a.edges[k].v)}].push_back(k);

  std::vector<Automorphism> out;
  std::vector<int> sigma(V, -1);
  std::vector<bool> used(V, false);

  auto emit = [&]() {
    // choices per edge group: a bijection onto the image group, and loop flips
    std::vector<std::pair<std::vector<int>, std::vector<int>>> gs;  // (source, target)
    for (const auto& [p, src] : groups) {
      std::pair<int, int> q{std::min(sigma[p.first], sigma[p.second]), std::max(sigma[p.first], sigma[p.second])};
      gs.push_back({src, groups.at(q)});
    }
    Automorphism base;
    base.vertex = sigma;
    base.flag.assign(a.num_flags(), -1);
    for (int i = 0; i < L; ++i) base.flag[i] = i;
    std::function<void(std::size_t, Automorphism&)> rec = [&](std::size_t gi, Automorphism& cur) {
      if (gi == gs.size()) {
        out.push_back(cur);
        return;
      }
      const auto& [src, tgt] = gs[gi];
      std::vector<int> perm = tgt;
      std::sort(perm.begin(), perm.end());
      do {
        bool loop = a.edges[src[0]].u == a.edges[src[0]].v;
        int flips = loop ? (1 << src.size()) : 1;
        for (int fm = 0; fm < flips; ++fm) {
          for (std::size_t j = 0; j < src.size(); ++j) {
            int k = src[j], t = perm[j];
            bool swap;
            if (loop)
              swap = (fm >> j) & 1;
            else
              swap = sigma[a.edges[k].u] != a.edges[t].u;
            cur.flag[a.edge_flag(k, 0)] = a.edge_flag(t, swap ? 1 : 0);
            cur.flag[a.edge_flag(k, 1)] = a.edge_flag(t, swap ? 0 : 1);
          }
          rec(gi + 1, cur);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0, base);
  };

  std::function<void(int)> assign = [&](int v) {
    if (v == V) {
      emit();
      return;
    }
    for (int w = 0; w < V; ++w) {
      if (used[w] || a.genus[w] != a.genus[v] || val[w] != val[v] || marks[w] != marks[v] ||
          mult[w][w] != mult[v][v])
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = mult[v][u] == mult[w][sigma[u]];
      if (!ok) continue;
      sigma[v] = w;
      used[w] = true;
      assign(v + 1);
      used[w] = false;
      sigma[v] = -1;
    }
  };
  assign(0);
  return out;
}

}  // namespace

const std::vector<Automorphism>& automorphisms(const std::string& key) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::vector<Automorphism>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, compute_automorphisms(decode_key(key).graph)).first->second;
}

std::vector<Structure> common_degenerations(const Graph& a, const std::string& key_a, const Graph& b) {
  std::vector<Structure> out;
  const int EA = a.num_edges(), EB = b.num_edges(), VB = b.num_vertices();
  const int VA = a.num_vertices();
  auto fl = b.flags_at();
  std::vector<int> a_genus = a.genus;
  std::sort(a_genus.begin(), a_genus.end());

  // local graph legs: marking j sits at local vertex pos[j-1]
  struct Local {
    const GraphEntry* entry;
    std::vector<int> leg_vertex;
  };
  std::vector<std::vector<Local>> cands(VB);
  for (int v = 0; v < VB; ++v) {
    int nv = static_cast<int>(fl[v].size());
    for (int k = 0; k <= EA; ++k) {
      for (const auto& e : graphs_with_edges(b.genus[v], nv, k)) {
        Local loc{&e, std::vector<int>(nv)};
        for (const auto& l : e.graph.legs) loc.leg_vertex[l.marking - 1] = l.vertex;
        cands[v].push_back(std::move(loc));
      }
    }
  }
  // position of each flag of b within its vertex list
  std::vector<int> slot(b.num_flags());
  for (int v = 0; v < VB; ++v)
    for (std::size_t j = 0; j < fl[v].size(); ++j) slot[fl[v][j]] = static_cast<int>(j);

  std::vector<int> choice(VB, 0);
  const auto& auts = automorphisms(key_a);

  auto build = [&]() {
    Structure s;
    Graph& gm = s.gamma;
    std::vector<int> offset(VB);
    Rational w = 1;
    for (int v = 0; v < VB; ++v) {
      const Local& loc = cands[v][choice[v]];
      offset[v] = gm.num_vertices();
      for (int x : loc.entry->graph.genus) {
        gm.add_vertex(x);
        s.b_vert.push_back(v);
      }
      w /= loc.entry->aut;
    }
    s.weight = w;
    auto at = [&](int f) {
      int v = b.flag_vertex(f);
      return offset[v] + cands[v][choice[v]].leg_vertex[slot[f]];
    };
    for (int i = 0; i < b.num_legs(); ++i) gm.add_leg(at(i), b.legs[i].marking);
    for (int k = 0; k < EB; ++k) gm.add_edge(at(b.edge_flag(k, 0)), at(b.edge_flag(k, 1)));
    for (int v = 0; v < VB; ++v)
      for (const auto& e : cands[v][choice[v]].entry->graph.edges)
        gm.add_edge(offset[v] + e.u, offset[v] + e.v);
    return s;
  };

  std::function<void(int, int, int)> rec = [&](int v, int internal, int verts) {
    if (v == VB) {
      int sz = EA - internal;
      if (sz < 0 || sz > EB) return;
      // contracting EB - sz edges removes at most that many vertices
      if (verts - (EB - sz) > VA || verts < VA) return;
      Structure proto = build();
      std::vector<bool> keep(proto.gamma.num_edges(), true);
      std::vector<int> sel(EB, 0);
      std::fill(sel.end() - sz, sel.end(), 1);
      do {
        for (int k = 0; k < EB; ++k) keep[k] = sel[k] != 0;
        std::vector<int> vmap, fmap;
        Graph c = contract(proto.gamma, keep, &vmap, &fmap);
        if (c.num_vertices() != VA) continue;
        std::vector<int> cg = c.genus;
        std::sort(cg.begin(), cg.end());
        if (cg != a_genus) continue;
        auto cm = canonicalize(DecGraph::bare(c), true);
        if (cm.key != key_a) continue;
        for (const auto& al : auts) {
          Structure s;
          s.gamma = proto.gamma;
          s.weight = proto.weight;
          s.b_vert = proto.b_vert;
          s.a_vert.resize(s.gamma.num_vertices());
          for (int u = 0; u < s.gamma.num_vertices(); ++u) s.a_vert[u] = al.vertex[cm.vertex_map[vmap[u]]];
          s.a_flag.assign(a.num_flags(), -1);
          for (int x = 0; x < s.gamma.num_flags(); ++x)
            if (fmap[x] >= 0) s.a_flag[al.flag[cm.flag_map[fmap[x]]]] = x;
          for (int k = 0; k < EB; ++k)
            if (sel[k]) s.excess.push_back(k);
          out.push_back(std::move(s));
        }
      } while (std::next_permutation(sel.begin(), sel.end()));
      return;
    }
    for (std::size_t i = 0; i < cands[v].size(); ++i) {
      const Graph& lg = cands[v][i].entry->graph;
      if (internal + lg.num_edges() > EA) break;  // candidates are sorted by edge count
      choice[v] = static_cast<int>(i);
      rec(v + 1, internal + lg.num_edges(), verts + lg.num_vertices());
    }
  };
  rec(0, 0, 0);
  return out;
}

void expand_structure(const Structure& s, const Decoration& da, const Decoration& db,
                      const Rational& coeff, bool exact_dims, const TermSink& sink) {
  const Graph& gm = s.gamma;
  const int V = gm.num_vertices();
  std::vector<int> psi(gm.num_flags(), 0);
  for (std::size_t f = 0; f < da.psi.size(); ++f) psi[s.a_flag[f]] += da.psi[f];
  for (std::size_t f = 0; f < db.psi.size(); ++f) psi[f] += db.psi[f];
  std::vector<int> load(V, 0), dim(V);
  auto val = gm.valences();
  for (int u = 0; u < V; ++u) dim[u] = 3 * gm.genus[u] - 3 + val[u];
  for (int f = 0; f < gm.num_flags(); ++f) load[gm.flag_vertex(f)] += psi[f];
  for (int u = 0; u < V; ++u)
    if (load[u] > dim[u]) return;

  // kappa factors with their possible target vertices
  std::vector<std::pair<int, std::vector<int>>> kitems;
  for (std::size_t w = 0; w < da.kappa.size(); ++w) {
    std::vector<int> pre;
    for (int u = 0; u < V; ++u)
      if (s.a_vert[u] == static_cast<int>(w)) pre.push_back(u);
    for (int x : da.kappa[w]) kitems.push_back({x, pre});
  }
  for (std::size_t w = 0; w < db.kappa.size(); ++w) {
    std::vector<int> pre;
    for (int u = 0; u < V; ++u)
      if (s.b_vert[u] == static_cast<int>(w)) pre.push_back(u);
    for (int x : db.kappa[w]) kitems.push_back({x, pre});
  }
  if (exact_dims) {
    int total = 0, need = 0;
    for (int u = 0; u < V; ++u) {
      total += load[u];
      need += dim[u];
    }
    total += static_cast<int>(s.excess.size());
    for (const auto& k : kitems) total += k.first;
    if (total != need) return;
  }

  Rational c = coeff * s.weight;
  if (s.excess.size() % 2) c = -c;
  std::vector<std::vector<int>> kappa(V);
  const int nx = static_cast<int>(s.excess.size());
  const int nk = static_cast<int>(kitems.size());

  std::function<void(int)> krec = [&](int i) {
    if (i == nk) {
      if (exact_dims)
        for (int u = 0; u < V; ++u)
          if (load[u] != dim[u]) return;
      auto sorted = kappa;
      for (auto& kv : sorted) std::sort(kv.begin(), kv.end());
      sink(psi, sorted, c);
      return;
    }
    const auto& [a, pre] = kitems[i];
    for (int u : pre) {
      if (load[u] + a > dim[u]) continue;
      load[u] += a;
      kappa[u].push_back(a);
      krec(i + 1);
      kappa[u].pop_back();
      load[u] -= a;
    }
  };
  std::function<void(int)> xrec = [&](int i) {
    if (i == nx) {
      krec(0);
      return;
    }
    int k = s.excess[i];
    for (int side = 0; side < 2; ++side) {
      int f = gm.edge_flag(k, side);
      int u = gm.flag_vertex(f);
      if (load[u] + 1 > dim[u]) continue;
      ++psi[f];
      ++load[u];
      xrec(i + 1);
      --load[u];
      --psi[f];
    }
  };
  xrec(0);
}

namespace {

struct PairKeyHash {
  std::size_t operator()(const std::pair<std::string, std::string>& p) const {
    return std::hash<std::string>()(p.first) * 31 + std::hash<std::string>()(p.second);
  }
};

const std::vector<Structure>& cached_structures(const GraphGroup& a, const GraphGroup& b) {
  thread_local std::unordered_map<std::pair<std::string, std::string>, std::vector<Structure>, PairKeyHash> cache;
  if (cache.size() > 50000) cache.clear();
  auto key = std::make_pair(a.key, b.key);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, common_degenerations(a.graph, a.key, b.graph)).first->second;
}

}  // namespace

TautClass multiply(const TautClass& a, const TautClass& b) {
  if (a.g() != b.g() || a.n() != b.n()) throw std::invalid_argument("multiply: ambient mismatch");
  TautClass out(a.g(), a.n());
  auto ga = group_by_graph(a), gb = group_by_graph(b);
  const int dim = a.dim();
  for (const auto& x : ga) {
    for (const auto& y : gb) {
      // the graph with fewer edges plays the role of A
      bool swap = x.graph.num_edges() > y.graph.num_edges();
      const GraphGroup& ra = swap ? y : x;
      const GraphGroup& rb = swap ? x : y;
      const int edges = ra.graph.num_edges() + rb.graph.num_edges();
      bool any = false;
      for (const auto& [da, ca] : ra.terms)
        for (const auto& [db, cb] : rb.terms)
          if (edges + da.degree() + db.degree() <= dim) any = true;
      if (!any) continue;
      const auto& structs = cached_structures(ra, rb);
      for (const auto& s : structs) {
        for (const auto& [da, ca] : ra.terms) {
          for (const auto& [db, cb] : rb.terms) {
            if (edges + da.degree() + db.degree() > dim) continue;
            expand_structure(s, da, db, ca * cb, false,
                             [&](const std::vector<int>& psi, const std::vector<std::vector<int>>& kappa,
                                 const Rational& c) {
                               DecGraph d{s.gamma, Decoration{psi, kappa}};
                               out.add(d, c);
                             });
          }
        }
      }
    }
  }
  return out;
}

TautClass power(const TautClass& a, int k) {
  TautClass out = TautClass::fundamental(a.g(), a.n());
  for (int i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

}  // namespace strata
