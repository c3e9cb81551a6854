#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strata/taut_class.hpp"

namespace strata {

// Terms of a class sharing one undecorated graph, decorations transported to
// the canonical representative of that graph.
struct GraphGroup {
  std::string key;
  Graph graph;
  std::vector<std::pair<Decoration, Rational>> terms;
};
std::vector<GraphGroup> group_by_graph(const TautClass& a);

struct Automorphism {
  std::vector<int> vertex;
  std::vector<int> flag;
};
// Automorphisms (fixing legs) of the canonical graph decode_key(key).graph.
const std::vector<Automorphism>& automorphisms(const std::string& key);

// A generic common degeneration of A and B. B's flags keep their indices in
// gamma; A's flags map through a_flag. Vertex maps go from gamma to A and B.
struct Structure {
  Graph gamma;
  Rational weight;
  std::vector<int> a_flag, a_vert, b_vert;
  std::vector<int> excess;  // gamma edges lying over edges of both
};
// A must be the canonical graph of key_a.
std::vector<Structure> common_degenerations(const Graph& a, const std::string& key_a, const Graph& b);

// Expands the product of decorations on one structure. The callback receives
// psi per gamma flag, sorted kappa lists per gamma vertex and the coefficient.
// With exact_dims only terms filling every vertex dimension are reported.
using TermSink = std::function<void(const std::vector<int>&, const std::vector<std::vector<int>>&,
                                    const Rational&)>;
void expand_structure(const Structure& s, const Decoration& da, const Decoration& db,
                      const Rational& coeff, bool exact_dims, const TermSink& sink);

TautClass multiply(const TautClass& a, const TautClass& b);
TautClass power(const TautClass& a, int k);

// pi^* for the map forgetting marking n+1 (result lives on (g, n+1)).
TautClass pullback_forget(const TautClass& a);
// pi_* for the map forgetting marking n (result lives on (g, n-1)).
TautClass pushforward_forget(const TautClass& a);
// sigma_{i*}: (g, n-1) -> (g, n), the section with marking n on a bubble with i.
TautClass section_pushforward(const TautClass& a, int i);

// Boundary divisor D_{0,S}: genus-0 bubble carrying the markings in S.
TautClass rational_tail_divisor(int g, int n, const std::vector<int>& s);

TautClass psi_class(int g, int n, int i);
TautClass kappa_class(int g, int n, int a);
TautClass omega_class(int g, int n, int i);
TautClass lambda_class(int g, int n);
TautClass delta_1(int g, int n);
TautClass delta_irr(int g, int n);
TautClass delta_total(int g, int n);
TautClass delta_nrt(int g, int n);

// Named lookup: psi(i), omega(i), kappa(a), lambda, delta_1, delta_irr, delta_total, delta_nrt.
TautClass standard_class(const std::string& name, int g, int n);

}  // namespace strata
