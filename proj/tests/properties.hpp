#pragma once

// Seeded randomized checks shared by the property tests and the acceptance
// binary. Each runner draws `cases` inputs and returns the number of failures.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace props {

struct Property {
  std::string name;
  std::function<int(int cases, std::uint64_t seed)> run;
};

const std::vector<Property>& all();

int normalize_idempotent(int cases, std::uint64_t seed);
int product_rule(int cases, std::uint64_t seed);
int mixed_partials(int cases, std::uint64_t seed);
int substitute_identity(int cases, std::uint64_t seed);
int equiv_reflexive_symmetric(int cases, std::uint64_t seed);
int total_derivatives_commute(int cases, std::uint64_t seed);
int prolongation_linear(int cases, std::uint64_t seed);
int prolongation_characteristic(int cases, std::uint64_t seed);
int bracket_antisymmetric_bilinear(int cases, std::uint64_t seed);
int bracket_jacobi(int cases, std::uint64_t seed);
int prolong_bracket_compatible(int cases, std::uint64_t seed);

constexpr std::uint64_t default_seed = 20240611;
constexpr int default_cases = 200;

}  // namespace props
