#pragma once

#include <vector>

#include "strata/graph.hpp"
#include "strata/taut_class.hpp"

namespace strata {

// Truncated exponential of D = sum a_i psi_i + c lambda - b delta as a graph
// sum; `a` holds one coefficient per marking. Degrees 0..max_degree.
TautClass pixton_exponential(int g, int n, const std::vector<Rational>& a, const Rational& c,
                             const Rational& b, int max_degree);

// The degree-n graph sum over graphs without rational tails that computes
// rho_1^*F ... rho_n^*F for F = a psi + c lambda - b delta.
TautClass prod_formula(int g, int n, const Rational& a, const Rational& c, const Rational& b);

// Hyperelliptic classes from the closed graph formulas.
TautClass hyp_ct_formula(int n);
TautClass hyp_rt_formula(int n);
// n <= 4 unless experimental is set (then n <= 6).
TautClass hyp_tilde_formula(int n, bool experimental = false);

// The term of one graph in the ct or enlarged graph sum (degree n part).
TautClass hyp_graph_contribution(const Graph& graph, bool tilde);

// Excess class of the recursion, 2 <= n <= 6.
TautClass phigamma(int n);

// Hyp_{2,n} and its non-compact-type part from the recursion. Cached.
TautClass hyp_recursive(int n);
TautClass nct_recursive(int n);

// Symmetrized closed forms for the non-compact-type part, n in 2..5.
TautClass nct_closed(int n);

// The strata in the last two lines of the n = 5 closed form, and the two
// lambda-decorated test classes they must pair to zero with.
TautClass nct5_tail();
std::vector<TautClass> nct5_spot_classes();

// A class on (2, |I|) with markings 1..|I| moved onto the markings I of
// (2, n) and pulled back along the forgetful map.
TautClass place_markings(const TautClass& a, const std::vector<int>& markings, int n);

// rho_n^* Hyp_{2,1} = 3 omega_i - lambda - delta_1 on (2, n).
TautClass weierstrass_divisor(int n, int i);

}  // namespace strata
