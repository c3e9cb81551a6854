#pragma once

#include <cstdint>
#include <vector>

#include "strata/graph.hpp"

namespace strata {

// A stable rooted tree with leaves 1..n and root leg r, stored as its clades:
// the leaf sets (bitmask, bit i-1 for leaf i) below each non-root vertex.
struct RootedTree {
  int n = 2;
  std::vector<std::uint32_t> clades;  // sorted, each of size 2..n-1

  int num_edges() const { return static_cast<int>(clades.size()); }
  int num_vertices() const { return num_edges() + 1; }
  bool operator==(const RootedTree& o) const { return n == o.n && clades == o.clades; }
  bool operator<(const RootedTree& o) const { return clades < o.clades; }
};

std::vector<RootedTree> rooted_trees(int n);     // all of G_{0,n+1}
bool has_no_pulled_leaf(const RootedTree& t);    // no clade {i, n}
std::vector<RootedTree> rooted_trees_ne(int n);  // the complement of the section images
RootedTree sigma_tree(const RootedTree& t, int i);  // leaves 1..n-1 -> 1..n
RootedTree forget_last_leaf(const RootedTree& t);   // leaves 1..n -> 1..n-1, stabilized
std::vector<RootedTree> b_family(int n);            // B_{0,n+1}

struct TreeGraph {
  Graph graph;          // root leg carries marking n+1
  std::vector<int> h;   // per vertex, the flag pointing to the root
};
TreeGraph tree_graph(const RootedTree& t);

}  // namespace strata
