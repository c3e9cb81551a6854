#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strata/graph.hpp"

namespace strata {

enum class GraphFilter { All, CompactType, RationalTails, NoRationalTails, Tilde };

GraphFilter parse_filter(const std::string& name);

struct GraphEntry {
  std::string key;
  Graph graph;  // canonical representative
  std::int64_t aut;
};

// All stable graphs of genus g with markings 1..n, sorted by (edges, key). Cached.
const std::vector<GraphEntry>& stable_graphs(int g, int n);
// Only the graphs with exactly `edges` edges; computes no further layers than needed.
const std::vector<GraphEntry>& graphs_with_edges(int g, int n, int edges);
std::vector<GraphEntry> enumerate_stable_graphs(int g, int n, GraphFilter filter = GraphFilter::All);

bool is_compact_type(const Graph& g);
bool has_rational_tails_shape(const Graph& g);  // compact type with a genus-g vertex
bool has_no_rational_tails(const Graph& g);     // compact type, every leaf vertex of positive genus

enum class EdgeKind { E1, E2, NonDisconnecting };

struct EdgeClass {
  std::vector<EdgeKind> kind;  // per edge
  // For E2 edges: flag towards the genus-2 side (at the rational side) and the outward flag.
  std::vector<int> h, hprime;
};

// Genus-2 graphs only.
EdgeClass classify_edges(const Graph& g);

// Edges whose removal disconnects the graph.
std::vector<bool> disconnecting_edges(const Graph& g);

struct CoreData {
  std::vector<bool> core_vertex;
  std::vector<bool> core_edge;
  std::vector<bool> outward;  // per flag
  std::vector<int> w;         // per flag, -1 off F^out
};

CoreData core_and_outward(const Graph& g);

// Membership in the enlarged graph set of the closed formula beyond compact type.
bool is_in_G_tilde(const Graph& g);
// The named readings of condition iii, exposed for tests.
bool tilde_condition_i(const Graph& g);
bool tilde_condition_ii(const Graph& g);
bool tilde_condition_iii(const Graph& g);
bool tilde_condition_iv(const Graph& g);

// Template legs with marking 0 receive the markings not yet used by the template.
// Returns the non-isomorphic fully labeled graphs (canonical); empty if the
// template already uses more legs than markings are available.
std::vector<GraphEntry> expand_partial_labels(const Graph& tmpl, const std::vector<int>& markings);

}  // namespace strata
