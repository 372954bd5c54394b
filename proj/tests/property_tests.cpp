#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

using namespace props;

TEST_CASE("normalize is idempotent") { CHECK(normalize_idempotent(default_cases, default_seed) == 0); }
TEST_CASE("product rule") { CHECK(product_rule(default_cases, default_seed + 1) == 0); }
TEST_CASE("mixed partials commute") { CHECK(mixed_partials(default_cases, default_seed + 2) == 0); }
TEST_CASE("substituting a variable for itself") { CHECK(substitute_identity(default_cases, default_seed + 3) == 0); }
TEST_CASE("equiv is reflexive and symmetric") { CHECK(equiv_reflexive_symmetric(default_cases, default_seed + 4) == 0); }
TEST_CASE("total derivatives commute") { CHECK(total_derivatives_commute(default_cases, default_seed + 5) == 0); }
TEST_CASE("prolongation is linear") { CHECK(prolongation_linear(default_cases, default_seed + 6) == 0); }
TEST_CASE("prolongation matches the characteristic formula") {
  CHECK(prolongation_characteristic(default_cases, default_seed + 7) == 0);
}
TEST_CASE("bracket is antisymmetric and bilinear") {
  CHECK(bracket_antisymmetric_bilinear(default_cases, default_seed + 8) == 0);
}
TEST_CASE("Jacobi identity") { CHECK(bracket_jacobi(default_cases, default_seed + 9) == 0); }
TEST_CASE("prolongation respects brackets") { CHECK(prolong_bracket_compatible(default_cases, default_seed + 10) == 0); }

TEST_CASE("a different seed also passes") {
  for (const auto& p : all()) {
    CAPTURE(p.name);
    CHECK(p.run(50, 7) == 0);
  }
}
