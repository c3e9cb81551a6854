#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "strata/graphs.hpp"

namespace strata {

GraphFilter parse_filter(const std::string& name) {
  if (name == "all") return GraphFilter::All;
  if (name == "ct") return GraphFilter::CompactType;
  if (name == "rt") return GraphFilter::RationalTails;
  if (name == "nrt") return GraphFilter::NoRationalTails;
  if (name == "tilde") return GraphFilter::Tilde;
  throw std::invalid_argument("unknown filter: " + name);
}

namespace {

// All graphs obtained from g by inserting one edge at vertex v.
void degenerate_vertex(const Graph& g, int v, std::vector<Graph>& out) {
  std::vector<int> fl;
  for (int f = 0; f < g.num_flags(); ++f)
    if (g.flag_vertex(f) == v) fl.push_back(f);
  int m = static_cast<int>(fl.size());
  if (g.genus[v] > 0) {
    Graph h = g;
    h.genus[v] -= 1;
    // appending an edge keeps existing flag indices (legs first, then edges)
    h.add_edge(v, v);
    out.push_back(std::move(h));
  }
  for (int g1 = 0; g1 <= g.genus[v]; ++g1) {
    int g2 = g.genus[v] - g1;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      int k = __builtin_popcount(mask);
      if (2 * g1 - 2 + k + 1 <= 0 || 2 * g2 - 2 + (m - k) + 1 <= 0) continue;
      Graph h = g;
      h.genus[v] = g1;
      int w = h.add_vertex(g2);
      for (int i = 0; i < m; ++i)
        if (!(mask & (1u << i))) h.set_flag_vertex(fl[i], w);
      h.add_edge(v, w);
      out.push_back(std::move(h));
    }
  }
}

void check_stable_pair(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable (g, n)");
}

struct Layers {
  std::deque<std::vector<GraphEntry>> layers;  // by number of edges; deque keeps references stable
  std::unordered_set<std::string> seen;
  bool complete = false;
  std::vector<GraphEntry> all;
};

// Extends the layer list until it holds `upto` edges or the enumeration ends.
void extend(Layers& L, int g, int n, int upto) {
  if (L.layers.empty()) {
    Graph start;
    start.add_vertex(g);
    for (int i = 1; i <= n; ++i) start.add_leg(0, i);
    auto c = canonicalize(DecGraph::bare(start), false);
    L.seen.insert(c.key);
    L.layers.push_back({{c.key, decode_key(c.key).graph, c.aut}});
  }
  while (!L.complete && static_cast<int>(L.layers.size()) <= upto) {
    std::vector<GraphEntry> next;
    for (const auto& e : L.layers.back()) {
      for (int v = 0; v < e.graph.num_vertices(); ++v) {
        std::vector<Graph> deg;
        degenerate_vertex(e.graph, v, deg);
        for (auto& h : deg) {
          auto cc = canonicalize(DecGraph::bare(h), false);
          if (L.seen.insert(cc.key).second) next.push_back({cc.key, decode_key(cc.key).graph, cc.aut});
        }
      }
    }
    if (next.empty()) {
      L.complete = true;
      break;
    }
    std::sort(next.begin(), next.end(),
              [](const GraphEntry& a, const GraphEntry& b) { return a.key < b.key; });
    L.layers.push_back(std::move(next));
  }
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

Layers& layers_for(int g, int n) {
  static std::map<std::pair<int, int>, Layers> cache;
  return cache[{g, n}];
}

}  // namespace

const std::vector<GraphEntry>& graphs_with_edges(int g, int n, int edges) {
  static const std::vector<GraphEntry> empty;
  check_stable_pair(g, n);
  std::lock_guard<std::mutex> lock(cache_mutex());
  Layers& L = layers_for(g, n);
  extend(L, g, n, edges);
  if (edges < 0 || edges >= static_cast<int>(L.layers.size())) return empty;
  return L.layers[edges];
}

const std::vector<GraphEntry>& stable_graphs(int g, int n) {
  check_stable_pair(g, n);
  std::lock_guard<std::mutex> lock(cache_mutex());
  Layers& L = layers_for(g, n);
  if (!L.complete || L.all.empty()) {
    extend(L, g, n, 1 << 20);
    L.all.clear();
    for (const auto& layer : L.layers) L.all.insert(L.all.end(), layer.begin(), layer.end());
  }
  return L.all;
}

std::vector<GraphEntry> enumerate_stable_graphs(int g, int n, GraphFilter filter) {
  std::vector<GraphEntry> out;
  for (const auto& e : stable_graphs(g, n)) {
    bool keep = true;
    switch (filter) {
      case GraphFilter::All: break;
      case GraphFilter::CompactType: keep = is_compact_type(e.graph); break;
      case GraphFilter::RationalTails: keep = has_rational_tails_shape(e.graph); break;
      case GraphFilter::NoRationalTails: keep = has_no_rational_tails(e.graph); break;
      case GraphFilter::Tilde: keep = g == 2 && is_in_G_tilde(e.graph); break;
    }
    if (keep) out.push_back(e);
  }
  return out;
}

}  // namespace strata
