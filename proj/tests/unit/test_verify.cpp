#include <doctest.h>

#include "strata/algebra.hpp"
#include "strata/integrals.hpp"
#include "strata/verify.hpp"

using namespace strata;

TEST_CASE("verdicts") {
  TautClass p = psi_class(0, 4, 1);
  Verdict same = numerical_equal(p, p);
  CHECK(same.status == Status::EqualDefinitive);
  CHECK(!same.witness);

  Verdict v = numerical_equal(psi_class(0, 4, 1), psi_class(0, 4, 2));
  CHECK(v.status == Status::EqualDefinitive);

  Verdict g2 = numerical_equal(lambda_class(2, 0), lambda_class(2, 0));
  CHECK(g2.status == Status::NumericallyEquivalent);

  Verdict d = numerical_equal(delta_1(2, 0), lambda_class(2, 0));
  CHECK(d.status == Status::Distinct);
  REQUIRE(d.witness);
  CHECK(d.witness->lhs != d.witness->rhs);
  TautClass gen = TautClass(2, 0);
  gen.add_key(d.witness->generator, 1);
  CHECK(pair(delta_1(2, 0), gen) == d.witness->lhs);
}

TEST_CASE("degree and ambient mismatch") {
  CHECK_THROWS(numerical_equal(psi_class(0, 5, 1), TautClass::fundamental(0, 5)));
  CHECK_THROWS(numerical_equal(psi_class(0, 5, 1), psi_class(0, 4, 1)));
}

TEST_CASE("compact type variant") {
  TautClass a = delta_1(2, 1) + delta_irr(2, 1);
  Verdict v = numerical_equal_ct(a, delta_1(2, 1));
  CHECK(v.equal());
  CHECK(!numerical_equal(a, delta_1(2, 1)).equal());
}

TEST_CASE("parallel sweep is deterministic") {
  TautClass x = psi_class(1, 3, 1) - psi_class(1, 3, 2);
  auto keys = generator_keys(1, 3, 2);
  Rational v1, v3;
  std::size_t i1 = first_nonzero_pairing(x, keys, 1, &v1);
  std::size_t i3 = first_nonzero_pairing(x, keys, 3, &v3);
  CHECK(i1 == i3);
  CHECK(v1 == v3);
  CHECK(i1 < keys.size());
}

TEST_CASE("report format") {
  ReportLine l{"trees", "chi-n3", true, 0.5, ""};
  CHECK(l.format().rfind("V trees/chi-n3 PASS t=", 0) == 0);
  Report r;
  r.lines.push_back(l);
  r.lines.push_back({"trees", "gne-n3", false, 0, "x"});
  CHECK(!r.ok());
  CHECK(r.summary().find("trees/gne-n3 FAIL") != std::string::npos);
}

TEST_CASE("tree suite") {
  SuiteOptions opt;
  opt.max_n = 3;
  Report r = suite_trees(opt);
  CHECK(r.ok());
  CHECK(!r.lines.empty());
}
