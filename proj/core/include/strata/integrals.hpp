#pragma once

#include <string>
#include <vector>

#include "strata/taut_class.hpp"

namespace strata {

// Witten correlators <tau_{a_1} ... tau_{a_n}>_g. Memoized process-wide.
Rational psi_integral(int g, std::vector<int> exponents);

// Table persistence: lines "I g=<g> a=<a1,...> v=<p/q>", sorted.
void load_table(const std::string& path);
void save_table(const std::string& path);
std::size_t table_size();
void clear_table();

struct TableAudit {
  std::size_t entries = 0;
  std::size_t string_checked = 0;
  std::size_t dilaton_checked = 0;
  std::size_t genus0_checked = 0;
  std::vector<std::string> failures;
};
// Re-derives every memoized entry through the string, dilaton and genus-0 closed forms.
TableAudit audit_table();

// Integral over M_{g,n}-bar of prod psi_i^{psi[i]} prod kappa_{kappa[j]}; n = psi.size().
Rational vertex_integral(int g, const std::vector<int>& psi, const std::vector<int>& kappa);

Rational integrate_term(const DecGraph& d);
Rational integrate(const TautClass& a);
Rational pair(const TautClass& a, const TautClass& b);

// Canonical keys of every decorated stratum of degree d, in key order.
std::vector<std::string> generator_keys(int g, int n, int d);
std::vector<TautClass> complementary_generators(int g, int n, int d);

// Pairings of x against each generator key (one value per key, same order).
// Work is split over `jobs` threads; the result does not depend on it.
std::vector<Rational> pairing_vector(const TautClass& x, const std::vector<std::string>& keys, int jobs = 1);

}  // namespace strata
