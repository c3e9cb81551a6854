#include <doctest.h>

#include "strata/algebra.hpp"
#include "strata/graphs.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/integrals.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

TautClass seed() { return 3 * psi_class(2, 1, 1) - lambda_class(2, 1) - delta_1(2, 1); }

TautClass banana2() {
  Graph g;
  g.genus = {1, 0};
  g.legs = {{1, 1}, {1, 2}};
  g.edges = {{0, 1}, {0, 1}};
  // the class of the stratum is xi_*(1) / |Aut|
  return Rational(1, 2) * TautClass::stratum(g);
}

}  // namespace

TEST_CASE("Weierstrass divisor seed") {
  CHECK(hyp_ct_formula(1) == seed());
  CHECK(hyp_rt_formula(1) == seed());
  CHECK(hyp_tilde_formula(1) == seed());
  CHECK(hyp_recursive(1) == seed());
  CHECK(weierstrass_divisor(1, 1) == seed());
}

TEST_CASE("argument checks") {
  CHECK_THROWS(hyp_tilde_formula(0));
  CHECK_THROWS(hyp_tilde_formula(5));
  CHECK_THROWS(phigamma(1));
  CHECK_THROWS(nct_closed(6));
}

TEST_CASE("Pixton exponential low degrees") {
  std::vector<Rational> a{3};
  TautClass e = pixton_exponential(2, 1, a, -1, 1, 2);
  CHECK(e.degree_part(0) == TautClass::fundamental(2, 1));
  TautClass d = 3 * psi_class(2, 1, 1) - lambda_class(2, 1) - delta_total(2, 1);
  CHECK(numerical_equal(e.degree_part(1), d).equal());
  CHECK(numerical_equal(2 * e.degree_part(2), multiply(d, d)).equal());

  TautClass e11 = pixton_exponential(1, 1, {Rational(1, 2)}, 2, -1, 1);
  TautClass d11 = Rational(1, 2) * psi_class(1, 1, 1) + 2 * lambda_class(1, 1) + delta_total(1, 1);
  CHECK(numerical_equal(e11.degree_part(1), d11).equal());
}

TEST_CASE("product formula") {
  TautClass p1 = prod_formula(2, 1, 3, -1, 1);
  TautClass want = 3 * psi_class(2, 1, 1) - lambda_class(2, 1) - delta_nrt(2, 1);
  CHECK(numerical_equal(p1, want).equal());
  CHECK(prod_formula(2, 0, 3, -1, 1) == TautClass::fundamental(2, 0));
}

TEST_CASE("rational tails versus compact type at n = 2") {
  CHECK(numerical_equal(hyp_rt_formula(2), hyp_ct_formula(2)).equal());
}

TEST_CASE("the single non-compact-type stratum at n = 2") {
  TautClass p = phigamma(2);
  CHECK(p.size() == 1);
  CHECK(p == banana2());
  CHECK(nct_recursive(2) == -1 * banana2());
  CHECK(nct_closed(2) == nct_recursive(2));
  CHECK(numerical_equal(hyp_tilde_formula(2) - hyp_ct_formula(2), -1 * banana2()).equal());
}

TEST_CASE("enlarged graph contributions") {
  // h1 = 1 graphs enter with a negative sign
  Graph b;
  b.genus = {1, 0};
  b.legs = {{1, 1}, {1, 2}};
  b.edges = {{0, 1}, {0, 1}};
  TautClass c = hyp_graph_contribution(b, true);
  REQUIRE(c.size() == 1);
  CHECK(c.terms().begin()->second < 0);
}

TEST_CASE("pushforward of the excess class") {
  TautClass lhs = pushforward_forget(relabel(phigamma(3), {0, 1, 3, 2}));
  CHECK(numerical_equal(lhs, 5 * phigamma(2)).equal());
}

TEST_CASE("pushforward of the recursion") {
  CHECK(numerical_equal(pushforward_forget(hyp_recursive(2)), 5 * hyp_recursive(1)).equal());
}

TEST_CASE("closed form at n = 3") {
  CHECK(numerical_equal(nct_closed(3), nct_recursive(3)).equal());
  TautClass p = phigamma(3);
  // every template has a cycle; lambda in the Hyp factors can add a second one
  for (const auto& [key, c] : p.terms()) CHECK(decode_key(key).graph.h1() >= 1);
}
