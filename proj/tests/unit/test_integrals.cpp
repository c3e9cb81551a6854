#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "strata/algebra.hpp"
#include "strata/integrals.hpp"

using namespace strata;

TEST_CASE("Witten correlators") {
  CHECK(psi_integral(0, {0, 0, 0}) == 1);
  CHECK(psi_integral(1, {1}) == Rational(1, 24));
  // dilaton route: <tau_1 tau_1>_1 = (2g-2+n) <tau_1>_1 with n = 1
  CHECK(psi_integral(1, {1, 1}) == Rational(1, 24));
  // genus-0 closed form: multinomial (n-3)! / prod a_i!
  CHECK(psi_integral(0, {1, 1, 0, 0, 0}) == 2);
  CHECK(psi_integral(0, {2, 1, 0, 0, 0, 0}) == 3);
  // <tau_4>_2 through DVV agrees with the string/dilaton route from <tau_4 tau_0>_2 and <tau_4 tau_1>_2
  Rational t4 = psi_integral(2, {4});
  CHECK(t4 == Rational(1, 1152));
  CHECK(psi_integral(2, {4, 1}) == 3 * t4);
  CHECK(psi_integral(2, {5, 0}) == t4);
  CHECK(psi_integral(0, {1, 0, 0}) == 0);
}

TEST_CASE("kappa integrals") {
  CHECK(vertex_integral(1, {0}, {1}) == Rational(1, 24));
  CHECK(vertex_integral(1, {0}, {1}) == psi_integral(1, {0, 2}));
  CHECK(vertex_integral(0, {0, 0, 0}, {}) == 1);
  // kappa_1^2 on M_{0,5}: conversion versus multiplying divisors
  Rational direct = vertex_integral(0, {0, 0, 0, 0, 0}, {1, 1});
  TautClass k = kappa_class(0, 5, 1);
  CHECK(integrate(multiply(k, k)) == direct);
  CHECK(direct == 5);
}

TEST_CASE("integrate and pair") {
  CHECK(integrate(psi_class(0, 4, 1)) == 1);
  CHECK(integrate(psi_class(0, 5, 1)) == 0);  // wrong degree
  CHECK(pair(psi_class(0, 4, 1), TautClass::fundamental(0, 4)) == 1);
  CHECK(integrate(multiply(psi_class(1, 2, 1), delta_irr(1, 2))) == Rational(1, 2));
}

TEST_CASE("complementary generators") {
  CHECK(generator_keys(0, 4, 1).size() == 8);
  CHECK(complementary_generators(0, 4, 0).size() == 1);
  auto keys = generator_keys(1, 2, 1);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  auto v1 = pairing_vector(psi_class(1, 2, 1), keys, 1);
  auto v2 = pairing_vector(psi_class(1, 2, 1), keys, 3);
  CHECK(v1 == v2);
}

TEST_CASE("table persistence and audit") {
  psi_integral(2, {2, 2, 2, 1});
  psi_integral(3, {6, 2});
  auto path = std::filesystem::temp_directory_path() / "strata_table_test.txt";
  save_table(path.string());
  std::size_t before = table_size();
  clear_table();
  CHECK(table_size() == 0);
  load_table(path.string());
  CHECK(table_size() == before);
  TableAudit a = audit_table();
  CHECK(a.failures.empty());
  CHECK(a.entries == before);
  std::filesystem::remove(path);
}
