#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "liereduce/calculus.hpp"

namespace liereduce {

struct SampleConfig {
  int samples = 16;
  double tolerance = 1e-9;
  std::uint64_t seed = 20240611;
};

/// Deterministic points with every listed variable drawn from the rationals
/// k/64 in [1/4, 2].
class Sampler {
 public:
  Sampler(std::set<std::string> vars, std::uint64_t seed);
  Point next();

 private:
  std::vector<std::string> vars_;
  std::uint64_t state_;
};

/// Evaluates `exprs` at `count` points where all of them are defined. Throws
/// SamplingError when too many draws fall outside a domain.
std::vector<std::vector<double>> sample_values(const std::vector<Expr>& exprs, int count,
                                               std::uint64_t seed);

/// Structural zero test of a - b, then the sampled numeric fallback.
bool equiv(const Expr& a, const Expr& b, const SampleConfig& config = {});

/// True when `e` is nonzero at every valid sample point.
bool sampled_nonzero(const Expr& e, const SampleConfig& config = {});

}  // namespace liereduce
