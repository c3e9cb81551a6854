#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

// Marking 0 is reserved for an unmarked leg of a partially labeled template.
struct Leg {
  int vertex = 0;
  int marking = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
};

// Flags are numbered legs first, then two per edge:
// leg i -> i, edge k -> L + 2k (at u) and L + 2k + 1 (at v).
struct Graph {
  std::vector<int> genus;
  std::vector<Leg> legs;
  std::vector<Edge> edges;

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_legs() const { return static_cast<int>(legs.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_flags() const { return num_legs() + 2 * num_edges(); }

  bool is_leg(int f) const { return f < num_legs(); }
  int edge_of(int f) const { return (f - num_legs()) / 2; }
  int edge_flag(int k, int side) const { return num_legs() + 2 * k + side; }
  int flag_vertex(int f) const;
  void set_flag_vertex(int f, int v);
  int other_flag(int f) const;  // partner half-edge, -1 for legs

  int h1() const { return num_edges() - num_vertices() + 1; }
  int total_genus() const;
  int valence(int v) const;
  std::vector<int> valences() const;
  std::vector<std::vector<int>> flags_at() const;  // flags per vertex, increasing
  int vertex_dim(int v) const { return 3 * genus[v] - 3 + valence(v); }
  int dimension() const;  // of the ambient space
  int leg_with_marking(int m) const;

  int add_vertex(int g) {
    genus.push_back(g);
    return num_vertices() - 1;
  }
  void add_leg(int v, int marking) { legs.push_back({v, marking}); }
  void add_edge(int u, int v) { edges.push_back({u, v}); }
};

struct StructuralViolation : std::runtime_error {
  int vertex;
  StructuralViolation(const std::string& what, int v) : std::runtime_error(what), vertex(v) {}
};

// Throws StructuralViolation for unstable vertices or a disconnected graph.
void validate(const Graph& g);
bool is_stable(const Graph& g);
bool is_connected(const Graph& g);

// psi exponent per flag and a sorted kappa index list per vertex (entries a >= 1).
struct Decoration {
  std::vector<int> psi;
  std::vector<std::vector<int>> kappa;

  static Decoration trivial(const Graph& g) {
    return {std::vector<int>(g.num_flags(), 0), std::vector<std::vector<int>>(g.num_vertices())};
  }
  int degree() const;
  bool is_trivial() const;
};

struct DecGraph {
  Graph graph;
  Decoration dec;

  static DecGraph bare(Graph g) {
    DecGraph d{std::move(g), {}};
    d.dec = Decoration::trivial(d.graph);
    return d;
  }
  int degree() const { return graph.num_edges() + dec.degree(); }
  // False if some vertex carries more than its dimension.
  bool fits_vertex_dims() const;
};

struct Canonical {
  std::string key;
  std::int64_t aut = 1;          // automorphisms of the decorated graph fixing legs
  std::vector<int> vertex_map;   // input vertex -> canonical vertex
  std::vector<int> flag_map;     // input flag -> canonical flag
};

Canonical canonicalize(const DecGraph& d, bool with_maps = true);
std::string canonical_key(const DecGraph& d);
inline std::string canonical_key(const Graph& g) { return canonical_key(DecGraph::bare(g)); }
DecGraph decode_key(const std::string& key);

// Undecorated convenience wrapper used by the graphs module interface.
struct CanonicalGraph {
  Graph graph;
  std::int64_t aut;
  std::string key;
};
CanonicalGraph canonical_graph(const Graph& g);

// Contract every edge with keep[k] == false. Maps report where old vertices
// and flags went (-1 for flags of contracted edges).
Graph contract(const Graph& g, const std::vector<bool>& keep, std::vector<int>* vmap = nullptr,
               std::vector<int>* fmap = nullptr);

// Relabel markings by perm (perm[m] = new marking, index 0 unused).
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Line format: G g=<g> n=<n> V=<..> L=<mark:vid,..> E=<(v.s-v.s),..> aut=<k> h1=<b>
std::string graph_record(const Graph& g, std::int64_t aut);
std::string graph_record(const Graph& g);
Graph parse_graph_record(const std::string& line);
// (vertex, slot) of each flag; slots list legs first then half-edges, by flag index.
std::vector<std::pair<int, int>> flag_slots(const Graph& g);

}  // namespace strata
