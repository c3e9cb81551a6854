#include "strata/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace strata {

int Graph::flag_vertex(int f) const {
  if (is_leg(f)) return legs[f].vertex;
  const Edge& e = edges[edge_of(f)];
  return ((f - num_legs()) & 1) ? e.v : e.u;
}

void Graph::set_flag_vertex(int f, int v) {
  if (is_leg(f)) {
    legs[f].vertex = v;
    return;
  }
  Edge& e = edges[edge_of(f)];
  if ((f - num_legs()) & 1)
    e.v = v;
  else
    e.u = v;
}

int Graph::other_flag(int f) const {
  if (is_leg(f)) return -1;
  return ((f - num_legs()) & 1) ? f - 1 : f + 1;
}

int Graph::total_genus() const {
  return std::accumulate(genus.begin(), genus.end(), 0) + h1();
}

int Graph::valence(int v) const {
  int c = 0;
  for (const auto& l : legs) c += l.vertex == v;
  for (const auto& e : edges) c += (e.u == v) + (e.v == v);
  return c;
}

std::vector<int> Graph::valences() const {
  std::vector<int> val(genus.size(), 0);
  for (const auto& l : legs) ++val[l.vertex];
  for (const auto& e : edges) {
    ++val[e.u];
    ++val[e.v];
  }
  return val;
}

std::vector<std::vector<int>> Graph::flags_at() const {
  std::vector<std::vector<int>> out(genus.size());
  for (int f = 0; f < num_flags(); ++f) out[flag_vertex(f)].push_back(f);
  return out;
}

int Graph::dimension() const { return 3 * total_genus() - 3 + num_legs(); }

int Graph::leg_with_marking(int m) const {
  for (int i = 0; i < num_legs(); ++i)
    if (legs[i].marking == m) return i;
  return -1;
}

bool is_stable(const Graph& g) {
  auto val = g.valences();
  for (int v = 0; v < g.num_vertices(); ++v)
    if (2 * g.genus[v] - 2 + val[v] <= 0) return false;
  return true;
}

bool is_connected(const Graph& g) {
  int n = g.num_vertices();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (const auto& e : g.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

void validate(const Graph& g) {
  auto val = g.valences();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.genus[v] < 0) throw StructuralViolation("negative genus at vertex " + std::to_string(v), v);
    if (2 * g.genus[v] - 2 + val[v] <= 0)
      throw StructuralViolation("unstable vertex " + std::to_string(v), v);
  }
  if (!is_connected(g)) throw StructuralViolation("disconnected graph", 0);
}

int Decoration::degree() const {
  int d = std::accumulate(psi.begin(), psi.end(), 0);
  for (const auto& k : kappa) d += std::accumulate(k.begin(), k.end(), 0);
  return d;
}

bool Decoration::is_trivial() const {
  for (int p : psi)
    if (p) return false;
  for (const auto& k : kappa)
    if (!k.empty()) return false;
  return true;
}

bool DecGraph::fits_vertex_dims() const {
  std::vector<int> load(graph.num_vertices(), 0);
  for (int f = 0; f < graph.num_flags(); ++f) load[graph.flag_vertex(f)] += dec.psi[f];
  auto val = graph.valences();
  for (int v = 0; v < graph.num_vertices(); ++v) {
    for (int a : dec.kappa[v]) load[v] += a;
    if (load[v] > 3 * graph.genus[v] - 3 + val[v]) return false;
  }
  return true;
}

namespace {

using Sig = std::vector<int>;

// Ranks signatures; vertices with equal signatures share a color.
int rank_colors(const std::vector<Sig>& sig, std::vector<int>& colors) {
  int n = static_cast<int>(sig.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  int c = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++c;
    colors[order[i]] = c;
  }
  return c + 1;
}

struct Searcher {
  const DecGraph& d;
  int V;
  std::vector<std::vector<std::array<int, 3>>> adj;  // (nbr, psi own, psi other), non-loop
  std::string best;
  std::vector<int> best_perm;
  std::int64_t count = 0;

  explicit Searcher(const DecGraph& dg) : d(dg), V(dg.graph.num_vertices()), adj(V) {
    const Graph& g = d.graph;
    for (int k = 0; k < g.num_edges(); ++k) {
      const Edge& e = g.edges[k];
      if (e.u == e.v) continue;
      int pu = d.dec.psi[g.edge_flag(k, 0)], pv = d.dec.psi[g.edge_flag(k, 1)];
      adj[e.u].push_back({e.v, pu, pv});
      adj[e.v].push_back({e.u, pv, pu});
    }
  }

  std::vector<int> initial_colors() const {
    const Graph& g = d.graph;
    std::vector<Sig> sig(V);
    std::vector<Sig> legs(V), loops(V);
    for (int i = 0; i < g.num_legs(); ++i)
      legs[g.legs[i].vertex].push_back(g.legs[i].marking * 64 + d.dec.psi[i]);
    for (int k = 0; k < g.num_edges(); ++k) {
      const Edge& e = g.edges[k];
      if (e.u != e.v) continue;
      int a = d.dec.psi[g.edge_flag(k, 0)], b = d.dec.psi[g.edge_flag(k, 1)];
      loops[e.u].push_back(std::min(a, b) * 64 + std::max(a, b));
    }
    for (int v = 0; v < V; ++v) {
      Sig& s = sig[v];
      s.push_back(g.genus[v]);
      s.push_back(static_cast<int>(d.dec.kappa[v].size()));
      s.insert(s.end(), d.dec.kappa[v].begin(), d.dec.kappa[v].end());
      std::sort(legs[v].begin(), legs[v].end());
      s.push_back(static_cast<int>(legs[v].size()));
      s.insert(s.end(), legs[v].begin(), legs[v].end());
      std::sort(loops[v].begin(), loops[v].end());
      s.push_back(static_cast<int>(loops[v].size()));
      s.insert(s.end(), loops[v].begin(), loops[v].end());
      s.push_back(static_cast<int>(adj[v].size()));
    }
    std::vector<int> colors(V);
    rank_colors(sig, colors);
    return colors;
  }

  int refine(std::vector<int>& colors) const {
    int ncol = *std::max_element(colors.begin(), colors.end()) + 1;
    while (true) {
      std::vector<Sig> sig(V);
      for (int v = 0; v < V; ++v) {
        Sig& s = sig[v];
        s.push_back(colors[v]);
        for (const auto& a : adj[v]) s.push_back((colors[a[0]] * 64 + a[1]) * 64 + a[2]);
        std::sort(s.begin() + 1, s.end());
      }
      int next = rank_colors(sig, colors);
      if (next == ncol) return ncol;
      ncol = next;
    }
  }

  std::string encode(const std::vector<int>& perm) const {
    const Graph& g = d.graph;
    std::string key;
    key.reserve(3 + 2 * V + 3 * g.num_legs() + 4 * g.num_edges());
    key.push_back(static_cast<char>(V));
    key.push_back(static_cast<char>(g.num_legs()));
    key.push_back(static_cast<char>(g.num_edges()));
    std::vector<int> inv(V);
    for (int v = 0; v < V; ++v) inv[perm[v]] = v;
    for (int i = 0; i < V; ++i) key.push_back(static_cast<char>(g.genus[inv[i]]));
    for (int i = 0; i < V; ++i) {
      const auto& k = d.dec.kappa[inv[i]];
      key.push_back(static_cast<char>(k.size()));
      for (int a : k) key.push_back(static_cast<char>(a));
    }
    std::vector<std::array<int, 3>> lt(g.num_legs());
    for (int i = 0; i < g.num_legs(); ++i)
      lt[i] = {g.legs[i].marking, perm[g.legs[i].vertex], d.dec.psi[i]};
    std::sort(lt.begin(), lt.end());
    for (const auto& t : lt)
      for (int x : t) key.push_back(static_cast<char>(x));
    std::vector<std::array<int, 4>> et(g.num_edges());
    for (int k = 0; k < g.num_edges(); ++k) et[k] = edge_tuple(perm, k);
    std::sort(et.begin(), et.end());
    for (const auto& t : et)
      for (int x : t) key.push_back(static_cast<char>(x));
    return key;
  }

  std::array<int, 4> edge_tuple(const std::vector<int>& perm, int k) const {
    const Graph& g = d.graph;
    int a = perm[g.edges[k].u], b = perm[g.edges[k].v];
    int pa = d.dec.psi[g.edge_flag(k, 0)], pb = d.dec.psi[g.edge_flag(k, 1)];
    if (a > b || (a == b && pa > pb)) return {b, a, pb, pa};
    return {a, b, pa, pb};
  }

  void search(std::vector<int> colors) {
    int ncol = refine(colors);
    if (ncol == V) {
      std::string enc = encode(colors);
      if (count == 0 || enc < best) {
        best = std::move(enc);
        best_perm = colors;
        count = 1;
      } else if (enc == best) {
        ++count;
      }
      return;
    }
    std::vector<int> size(ncol, 0);
    for (int c : colors) ++size[c];
    int cell = 0;
    while (size[cell] == 1) ++cell;
    for (int x = 0; x < V; ++x) {
      if (colors[x] != cell) continue;
      std::vector<int> next(V);
      for (int y = 0; y < V; ++y) {
        if (colors[y] < cell)
          next[y] = colors[y];
        else if (y == x)
          next[y] = cell;
        else if (colors[y] == cell)
          next[y] = cell + 1;
        else
          next[y] = colors[y] + 1;
      }
      search(std::move(next));
    }
  }
};

std::int64_t factorial64(int m) {
  std::int64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Symmetries not seen by the vertex permutation: swaps of parallel edges with
// identical decorations, flips of symmetric loops, swaps of identical legs.
std::int64_t flag_symmetries(const std::string& key) {
  int V = static_cast<unsigned char>(key[0]);
  int L = static_cast<unsigned char>(key[1]);
  int E = static_cast<unsigned char>(key[2]);
  std::size_t pos = 3 + V;
  for (int i = 0; i < V; ++i) pos += 1 + static_cast<unsigned char>(key[pos]);
  std::int64_t s = 1;
  int run = 1;
  for (int i = 1; i <= L; ++i) {
    if (i < L && key.compare(pos + 3 * i, 3, key, pos + 3 * (i - 1), 3) == 0) {
      ++run;
    } else {
      s *= factorial64(run);
      run = 1;
    }
  }
  pos += 3 * L;
  run = 1;
  for (int i = 0; i < E; ++i) {
    const char* t = key.data() + pos + 4 * i;
    if (t[0] == t[1] && t[2] == t[3]) s *= 2;
    if (i + 1 < E && key.compare(pos + 4 * (i + 1), 4, key, pos + 4 * i, 4) == 0) {
      ++run;
    } else {
      s *= factorial64(run);
      run = 1;
    }
  }
  return s;
}

}  // namespace

Canonical canonicalize(const DecGraph& d, bool with_maps) {
  Searcher s(d);
  s.search(s.initial_colors());
  Canonical c;
  c.key = s.best;
  c.aut = s.count * flag_symmetries(c.key);
  if (!with_maps) return c;

  const Graph& g = d.graph;
  const auto& perm = s.best_perm;
  c.vertex_map = perm;
  c.flag_map.assign(g.num_flags(), -1);
  std::vector<int> lorder(g.num_legs());
  std::iota(lorder.begin(), lorder.end(), 0);
  auto ltuple = [&](int i) {
    return std::array<int, 3>{g.legs[i].marking, perm[g.legs[i].vertex], d.dec.psi[i]};
  };
  std::stable_sort(lorder.begin(), lorder.end(),
                   [&](int a, int b) { return ltuple(a) < ltuple(b); });
  for (int pos = 0; pos < g.num_legs(); ++pos) c.flag_map[lorder[pos]] = pos;
  std::vector<int> eorder(g.num_edges());
  std::iota(eorder.begin(), eorder.end(), 0);
  std::stable_sort(eorder.begin(), eorder.end(),
                   [&](int a, int b) { return s.edge_tuple(perm, a) < s.edge_tuple(perm, b); });
  int L = g.num_legs();
  for (int pos = 0; pos < g.num_edges(); ++pos) {
    int k = eorder[pos];
    int a = perm[g.edges[k].u], b = perm[g.edges[k].v];
    int pa = d.dec.psi[g.edge_flag(k, 0)], pb = d.dec.psi[g.edge_flag(k, 1)];
    bool flip = a > b || (a == b && pa > pb);
    c.flag_map[g.edge_flag(k, 0)] = L + 2 * pos + (flip ? 1 : 0);
    c.flag_map[g.edge_flag(k, 1)] = L + 2 * pos + (flip ? 0 : 1);
  }
  return c;
}

std::string canonical_key(const DecGraph& d) { return canonicalize(d, false).key; }

DecGraph decode_key(const std::string& key) {
  auto at = [&](std::size_t i) { return static_cast<int>(static_cast<unsigned char>(key[i])); };
  int V = at(0), L = at(1), E = at(2);
  DecGraph d;
  std::size_t pos = 3;
  for (int v = 0; v < V; ++v) d.graph.genus.push_back(at(pos++));
  d.dec.kappa.resize(V);
  for (int v = 0; v < V; ++v) {
    int k = at(pos++);
    for (int i = 0; i < k; ++i) d.dec.kappa[v].push_back(at(pos++));
  }
  d.dec.psi.assign(L + 2 * E, 0);
  for (int i = 0; i < L; ++i) {
    d.graph.legs.push_back({at(pos + 1), at(pos)});
    d.dec.psi[i] = at(pos + 2);
    pos += 3;
  }
  for (int k = 0; k < E; ++k) {
    d.graph.edges.push_back({at(pos), at(pos + 1)});
    d.dec.psi[L + 2 * k] = at(pos + 2);
    d.dec.psi[L + 2 * k + 1] = at(pos + 3);
    pos += 4;
  }
  return d;
}

CanonicalGraph canonical_graph(const Graph& g) {
  validate(g);
  auto c = canonicalize(DecGraph::bare(g), false);
  return {decode_key(c.key).graph, c.aut, c.key};
}

Graph contract(const Graph& g, const std::vector<bool>& keep, std::vector<int>* vmap,
               std::vector<int>* fmap) {
  int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < g.num_edges(); ++k) {
    if (keep[k]) continue;
    int a = find(g.edges[k].u), b = find(g.edges[k].v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> newidx(n, -1);
  Graph out;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (newidx[r] < 0) newidx[r] = out.add_vertex(0);
  }
  std::vector<int> vm(n);
  for (int v = 0; v < n; ++v) {
    vm[v] = newidx[find(v)];
    out.genus[vm[v]] += g.genus[v];
  }
  // each contracted edge adds one to the genus of its class, minus a spanning tree
  std::vector<int> members(out.num_vertices(), 0);
  for (int v = 0; v < n; ++v) ++members[vm[v]];
  for (int w = 0; w < out.num_vertices(); ++w) out.genus[w] -= members[w] - 1;
  for (int k = 0; k < g.num_edges(); ++k)
    if (!keep[k]) ++out.genus[vm[g.edges[k].u]];
  for (const auto& l : g.legs) out.add_leg(vm[l.vertex], l.marking);
  std::vector<int> fm(g.num_flags(), -1);
  for (int i = 0; i < g.num_legs(); ++i) fm[i] = i;
  for (int k = 0; k < g.num_edges(); ++k) {
    if (!keep[k]) continue;
    int nk = out.num_edges();
    out.add_edge(vm[g.edges[k].u], vm[g.edges[k].v]);
    fm[g.edge_flag(k, 0)] = out.edge_flag(nk, 0);
    fm[g.edge_flag(k, 1)] = out.edge_flag(nk, 1);
  }
  if (vmap) *vmap = vm;
  if (fmap) *fmap = fm;
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out = g;
  for (auto& l : out.legs)
    if (l.marking > 0) l.marking = perm.at(l.marking);
  return out;
}

std::vector<std::pair<int, int>> flag_slots(const Graph& g) {
  std::vector<std::pair<int, int>> out(g.num_flags());
  std::vector<int> next(g.num_vertices(), 0);
  for (int f = 0; f < g.num_flags(); ++f) {
    int v = g.flag_vertex(f);
    out[f] = {v, next[v]++};
  }
  return out;
}

std::string graph_record(const Graph& g, std::int64_t aut) {
  std::ostringstream os;
  os << "G g=" << g.total_genus() << " n=" << g.num_legs() << " V=";
  for (int v = 0; v < g.num_vertices(); ++v) os << (v ? "," : "") << g.genus[v];
  os << " L=";
  for (int i = 0; i < g.num_legs(); ++i) {
    os << (i ? "," : "");
    if (g.legs[i].marking == 0)
      os << '*';
    else
      os << g.legs[i].marking;
    os << ':' << g.legs[i].vertex;
  }
  os << " E=";
  auto slots = flag_slots(g);
  for (int k = 0; k < g.num_edges(); ++k) {
    auto a = slots[g.edge_flag(k, 0)], b = slots[g.edge_flag(k, 1)];
    os << (k ? "," : "") << '(' << a.first << '.' << a.second << '-' << b.first << '.' << b.second
       << ')';
  }
  os << " aut=" << aut << " h1=" << g.h1();
  return os.str();
}

std::string graph_record(const Graph& g) { return graph_record(g, canonical_graph(g).aut); }

namespace {

std::string field(const std::string& line, const std::string& name) {
  std::string tag = " " + name + "=";
  auto p = line.find(tag);
  if (p == std::string::npos) throw std::invalid_argument("missing field " + name + " in: " + line);
  p += tag.size();
  auto e = line.find(' ', p);
  return line.substr(p, e == std::string::npos ? std::string::npos : e - p);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace

Graph parse_graph_record(const std::string& line) {
  if (line.rfind("G ", 0) != 0) throw std::invalid_argument("not a graph record: " + line);
  Graph g;
  for (const auto& s : split(field(line, "V"), ',')) g.add_vertex(std::stoi(s));
  for (const auto& s : split(field(line, "L"), ',')) {
    auto c = s.find(':');
    std::string m = s.substr(0, c);
    g.add_leg(std::stoi(s.substr(c + 1)), m == "*" ? 0 : std::stoi(m));
  }
  std::string es = field(line, "E");
  std::size_t p = 0;
  while ((p = es.find('(', p)) != std::string::npos) {
    auto q = es.find(')', p);
    std::string body = es.substr(p + 1, q - p - 1);
    auto dash = body.find('-');
    auto va = body.substr(0, body.find('.'));
    auto rest = body.substr(dash + 1);
    auto vb = rest.substr(0, rest.find('.'));
    g.add_edge(std::stoi(va), std::stoi(vb));
    p = q;
  }
  return g;
}

}  // namespace strata
