#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "strata/algebra.hpp"
#include "strata/graphs.hpp"
#include "strata/integrals.hpp"

namespace strata {

namespace {

struct VKeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x + 1);
    return h;
  }
};

// kappa_b K = pi_*(psi^{b+1} pi^*K) with pi^* kappa_a = kappa_a - psi^a
Rational kappa_reduce(int g, std::vector<int> psi, std::vector<int> kappa) {
  if (kappa.empty()) return psi_integral(g, std::move(psi));
  int b = kappa.back();
  kappa.pop_back();
  const int m = static_cast<int>(kappa.size());
  Rational total = 0;
  for (int mask = 0; mask < (1 << m); ++mask) {
    int e = b + 1;
    std::vector<int> rest;
    for (int j = 0; j < m; ++j) {
      if (mask & (1 << j))
        e += kappa[j];
      else
        rest.push_back(kappa[j]);
    }
    auto p = psi;
    p.push_back(e);
    Rational v = vertex_integral(g, p, rest);
    total += (__builtin_popcount(mask) % 2) ? -v : v;
  }
  return total;
}

}  // namespace

Rational vertex_integral(int g, const std::vector<int>& psi, const std::vector<int>& kappa) {
  int n = static_cast<int>(psi.size());
  int deg = 0;
  for (int x : psi) deg += x;
  for (int x : kappa) deg += x;
  if (2 * g - 2 + n <= 0 || deg != 3 * g - 3 + n) return 0;
  if (kappa.empty()) return psi_integral(g, psi);
  // key: genus, sorted psi, separator, sorted kappa
  std::vector<int> key{g};
  std::vector<int> p = psi, k = kappa;
  std::sort(p.begin(), p.end());
  std::sort(k.begin(), k.end());
  key.insert(key.end(), p.begin(), p.end());
  key.push_back(-1);
  key.insert(key.end(), k.begin(), k.end());
  thread_local std::unordered_map<std::vector<int>, Rational, VKeyHash> memo;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Rational v = kappa_reduce(g, p, k);
  memo.emplace(std::move(key), v);
  return v;
}

namespace {

Rational integrate_raw(const Graph& g, const std::vector<int>& psi, const std::vector<std::vector<int>>& kappa) {
  const int V = g.num_vertices();
  std::vector<std::vector<int>> at(V);
  for (int f = 0; f < g.num_flags(); ++f) at[g.flag_vertex(f)].push_back(psi[f]);
  Rational r = 1;
  for (int v = 0; v < V; ++v) {
    r *= vertex_integral(g.genus[v], at[v], kappa[v]);
    if (r == 0) return 0;
  }
  return r;
}

}  // namespace

Rational integrate_term(const DecGraph& d) {
  if (d.degree() != d.graph.dimension()) return 0;
  return integrate_raw(d.graph, d.dec.psi, d.dec.kappa);
}

Rational integrate(const TautClass& a) {
  Rational total = 0;
  for (const auto& [key, c] : a.terms()) {
    DecGraph d = decode_key(key);
    if (d.degree() != a.dim()) continue;
    total += c * integrate_term(d);
  }
  return total;
}

namespace {

// Sum over all structures of the pairing of two graph groups; adds c * value
// for each pair of terms into acc(index of the b-term).
void pair_groups(const GraphGroup& x, const GraphGroup& y, int dim,
                 const std::function<void(std::size_t, std::size_t, const Rational&)>& acc) {
  bool swap = x.graph.num_edges() > y.graph.num_edges();
  const GraphGroup& ra = swap ? y : x;
  const GraphGroup& rb = swap ? x : y;
  const int edges = ra.graph.num_edges() + rb.graph.num_edges();
  bool any = false;
  for (const auto& ta : ra.terms)
    for (const auto& tb : rb.terms)
      if (edges + ta.first.degree() + tb.first.degree() == dim) any = true;
  if (!any) return;
  auto structs = common_degenerations(ra.graph, ra.key, rb.graph);
  for (const auto& s : structs) {
    for (std::size_t i = 0; i < ra.terms.size(); ++i) {
      const auto& [da, ca] = ra.terms[i];
      for (std::size_t j = 0; j < rb.terms.size(); ++j) {
        const auto& [db, cb] = rb.terms[j];
        if (edges + da.degree() + db.degree() != dim) continue;
        Rational sum = 0;
        expand_structure(s, da, db, 1, true,
                         [&](const std::vector<int>& psi, const std::vector<std::vector<int>>& kappa,
                             const Rational& c) { sum += c * integrate_raw(s.gamma, psi, kappa); });
        if (sum == 0) continue;
        if (swap)
          acc(j, i, sum * ca * cb);
        else
          acc(i, j, sum * ca * cb);
      }
    }
  }
}

}  // namespace

Rational pair(const TautClass& a, const TautClass& b) {
  if (a.g() != b.g() || a.n() != b.n()) throw std::invalid_argument("pair: ambient mismatch");
  auto ga = group_by_graph(a), gb = group_by_graph(b);
  Rational total = 0;
  for (const auto& x : ga)
    for (const auto& y : gb)
      pair_groups(x, y, a.dim(), [&](std::size_t, std::size_t, const Rational& v) { total += v; });
  return total;
}

std::vector<std::string> generator_keys(int g, int n, int d) {
  std::set<std::string> keys;
  for (const auto& e : stable_graphs(g, n)) {
    const Graph& gr = e.graph;
    int rest = d - gr.num_edges();
    if (rest < 0) continue;
    const int F = gr.num_flags(), V = gr.num_vertices();
    auto val = gr.valences();
    std::vector<int> dim(V);
    for (int v = 0; v < V; ++v) dim[v] = 3 * gr.genus[v] - 3 + val[v];
    DecGraph cur = DecGraph::bare(gr);
    std::vector<int> load(V, 0);
    // kappa multisets per vertex, entries non-increasing, then psi per flag
    std::function<void(int, int)> psi_rec;
    std::function<void(int, int, int)> kappa_rec = [&](int v, int left, int maxa) {
      if (v == V) {
        psi_rec(0, left);
        return;
      }
      kappa_rec(v + 1, left, left);
      for (int a = std::min(maxa, std::min(left, dim[v] - load[v])); a >= 1; --a) {
        cur.dec.kappa[v].insert(cur.dec.kappa[v].begin(), a);
        load[v] += a;
        kappa_rec(v, left - a, a);
        load[v] -= a;
        cur.dec.kappa[v].erase(cur.dec.kappa[v].begin());
      }
    };
    psi_rec = [&](int f, int left) {
      if (f == F) {
        if (left == 0) keys.insert(canonical_key(cur));
        return;
      }
      int v = gr.flag_vertex(f);
      for (int p = 0; p <= std::min(left, dim[v] - load[v]); ++p) {
        cur.dec.psi[f] = p;
        load[v] += p;
        psi_rec(f + 1, left - p);
        load[v] -= p;
      }
      cur.dec.psi[f] = 0;
    };
    kappa_rec(0, rest, rest);
  }
  return {keys.begin(), keys.end()};
}

std::vector<TautClass> complementary_generators(int g, int n, int d) {
  std::vector<TautClass> out;
  for (const auto& k : generator_keys(g, n, d)) {
    TautClass t(g, n);
    t.add_key(k, 1);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Rational> pairing_vector(const TautClass& x, const std::vector<std::string>& keys, int jobs) {
  std::vector<Rational> result(keys.size(), 0);
  auto gx = group_by_graph(x);
  // generators grouped by graph, remembering which key each term came from
  std::map<std::string, GraphGroup> groups;
  std::map<std::string, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    DecGraph d = decode_key(keys[i]);
    auto cm = canonicalize(DecGraph::bare(d.graph), true);
    Decoration dec = Decoration::trivial(d.graph);
    for (int f = 0; f < d.graph.num_flags(); ++f) dec.psi[cm.flag_map[f]] = d.dec.psi[f];
    for (int v = 0; v < d.graph.num_vertices(); ++v) dec.kappa[cm.vertex_map[v]] = d.dec.kappa[v];
    auto it = groups.find(cm.key);
    if (it == groups.end()) it = groups.emplace(cm.key, GraphGroup{cm.key, decode_key(cm.key).graph, {}}).first;
    it->second.terms.emplace_back(std::move(dec), Rational(1));
    owners[cm.key].push_back(i);
  }
  std::vector<const GraphGroup*> glist;
  for (const auto& [k, g] : groups) glist.push_back(&g);

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t gi = begin; gi < glist.size(); gi += step) {
      const GraphGroup& gg = *glist[gi];
      const auto& own = owners.at(gg.key);
      for (const auto& xg : gx)
        pair_groups(xg, gg, x.dim(),
                    [&](std::size_t, std::size_t j, const Rational& v) { result[own[j]] += v; });
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }
  return result;
}

}  // namespace strata
