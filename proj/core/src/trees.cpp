#include "strata/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace strata {

namespace {

std::uint32_t bit(int leaf) { return 1u << (leaf - 1); }

RootedTree make(int n, std::vector<std::uint32_t> c) {
  std::sort(c.begin(), c.end());
  return {n, std::move(c)};
}

// Clades of t (leaves 1..n-1) with leaf n added to every clade for which keep(c) holds.
std::vector<std::uint32_t> with_leaf(const RootedTree& t, int n, auto keep) {
  std::vector<std::uint32_t> out;
  for (auto c : t.clades) out.push_back(keep(c) ? (c | bit(n)) : c);
  return out;
}

}  // namespace

std::vector<RootedTree> rooted_trees(int n) {
  if (n < 2) throw std::invalid_argument("rooted_trees: n >= 2");
  std::vector<RootedTree> level{RootedTree{2, {}}};
  for (int m = 3; m <= n; ++m) {
    std::vector<RootedTree> next;
    std::uint32_t all_prev = (1u << (m - 1)) - 1;
    for (const auto& t : level) {
      // on the root vertex
      next.push_back(make(m, t.clades));
      // on a non-root vertex
      for (auto c : t.clades)
        next.push_back(make(m, with_leaf(t, m, [&](std::uint32_t d) { return (d & c) == c; })));
      // on the edge above a clade
      for (auto c : t.clades) {
        auto cl = with_leaf(t, m, [&](std::uint32_t d) { return (d & c) == c && d != c; });
        cl.push_back(c | bit(m));
        next.push_back(make(m, cl));
      }
      // on a leaf
      for (int i = 1; i < m; ++i) {
        auto cl = with_leaf(t, m, [&](std::uint32_t d) { return (d & bit(i)) != 0; });
        cl.push_back(bit(i) | bit(m));
        next.push_back(make(m, cl));
      }
      // on the root leg
      auto cl = t.clades;
      cl.push_back(all_prev);
      next.push_back(make(m, cl));
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

bool has_no_pulled_leaf(const RootedTree& t) {
  for (auto c : t.clades)
    if (__builtin_popcount(c) == 2 && (c & bit(t.n))) return false;
  return true;
}

std::vector<RootedTree> rooted_trees_ne(int n) {
  std::vector<RootedTree> out;
  for (auto& t : rooted_trees(n))
    if (has_no_pulled_leaf(t)) out.push_back(t);
  return out;
}

RootedTree sigma_tree(const RootedTree& t, int i) {
  int m = t.n + 1;
  auto cl = with_leaf(t, m, [&](std::uint32_t d) { return (d & bit(i)) != 0; });
  cl.push_back(bit(i) | bit(m));
  return make(m, cl);
}

RootedTree forget_last_leaf(const RootedTree& t) {
  int m = t.n - 1;
  std::uint32_t all = (1u << m) - 1;
  std::set<std::uint32_t> cl;
  for (auto c : t.clades) {
    std::uint32_t d = c & ~bit(t.n);
    if (__builtin_popcount(d) >= 2 && d != all) cl.insert(d);
  }
  return {m, std::vector<std::uint32_t>(cl.begin(), cl.end())};
}

namespace {

// Leaves hanging directly at the vertex of clade c (c == 0 for the root).
std::uint32_t direct_leaves(const RootedTree& t, std::uint32_t c) {
  std::uint32_t all = (1u << t.n) - 1;
  std::uint32_t own = c ? c : all;
  for (auto d : t.clades)
    if (d != c && (d & own) == d) own &= ~d;
  return own;
}

// Attach leaf n+1 to each vertex of t.
void attach_to_vertices(const RootedTree& t, std::vector<RootedTree>& out) {
  int m = t.n + 1;
  out.push_back(make(m, t.clades));
  for (auto c : t.clades)
    out.push_back(make(m, with_leaf(t, m, [&](std::uint32_t d) { return (d & c) == c; })));
}

int vertex_valence(const RootedTree& t, std::uint32_t c) {
  int val = __builtin_popcount(direct_leaves(t, c));
  for (auto d : t.clades) {
    bool child = d != c && (c == 0 || (d & c) == d);
    if (!child) continue;
    bool maximal = true;
    for (auto e : t.clades)
      if (e != d && e != c && (e & d) == d && (c == 0 || (e & c) == e)) maximal = false;
    if (maximal) ++val;
  }
  return val + 1;  // parent edge or root leg
}

}  // namespace

std::vector<RootedTree> b_family(int n) {
  if (n < 3) throw std::invalid_argument("b_family: n >= 3");
  std::vector<RootedTree> b;
  attach_to_vertices(RootedTree{2, {}}, b);
  for (int m = 4; m <= n; ++m) {
    std::vector<RootedTree> base = b;
    for (const auto& t : b) {
      std::uint32_t last = bit(m - 1);
      for (int i = 1; i <= m - 2; ++i) {
        // the vertex carrying both i and m-1
        std::uint32_t c = 0;
        bool found = false;
        for (std::uint32_t cand : t.clades)
          if (direct_leaves(t, cand) & last) c = cand, found = true;
        if (!found) c = 0;
        std::uint32_t here = direct_leaves(t, c);
        if (!(here & bit(i)) || vertex_valence(t, c) < 4) continue;
        auto cl = t.clades;
        cl.push_back(bit(i) | last);
        base.push_back(make(m - 1, cl));
      }
    }
    std::vector<RootedTree> next;
    for (const auto& t : base) attach_to_vertices(t, next);
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end())
      throw std::logic_error("b_family: repeated tree");
    b = std::move(next);
  }
  std::sort(b.begin(), b.end());
  return b;
}

TreeGraph tree_graph(const RootedTree& t) {
  TreeGraph tg;
  Graph& g = tg.graph;
  g.add_vertex(0);  // root
  std::vector<std::uint32_t> cl = t.clades;
  // parents before children: larger clades first
  std::sort(cl.begin(), cl.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::vector<int> vid(cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) vid[i] = g.add_vertex(0);
  auto owner = [&](std::uint32_t s) {
    int best = 0, size = 1 << 30;
    for (std::size_t i = 0; i < cl.size(); ++i)
      if ((cl[i] & s) == s && cl[i] != s && __builtin_popcount(cl[i]) < size) {
        size = __builtin_popcount(cl[i]);
        best = vid[i];
      }
    return best;
  };
  for (int leaf = 1; leaf <= t.n; ++leaf) {
    std::uint32_t s = bit(leaf);
    int best = 0, size = 1 << 30;
    for (std::size_t i = 0; i < cl.size(); ++i)
      if ((cl[i] & s) && __builtin_popcount(cl[i]) < size) {
        size = __builtin_popcount(cl[i]);
        best = vid[i];
      }
    g.add_leg(best, leaf);
  }
  g.add_leg(0, t.n + 1);
  for (std::size_t i = 0; i < cl.size(); ++i) g.add_edge(owner(cl[i]), vid[i]);
  tg.h.assign(g.num_vertices(), -1);
  tg.h[0] = t.n;  // flag index of the root leg
  for (std::size_t i = 0; i < cl.size(); ++i) tg.h[vid[i]] = g.edge_flag(static_cast<int>(i), 1);
  return tg;
}

}  // namespace strata
