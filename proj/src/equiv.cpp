#include "liereduce/equiv.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "liereduce/errors.hpp"

namespace liereduce {

Sampler::Sampler(std::set<std::string> vars, std::uint64_t seed)
    : vars_(vars.begin(), vars.end()), state_(seed) {}

Point Sampler::next() {
  std::mt19937_64 rng(state_);
  state_ = rng();
  std::uniform_int_distribution<int> k(16, 128);
  Point p;
  for (const auto& v : vars_) p[v] = k(rng) / 64.0;
  return p;
}

std::vector<std::vector<double>> sample_values(const std::vector<Expr>& exprs, int count,
                                               std::uint64_t seed) {
  std::set<std::string> vars;
  for (const auto& e : exprs) {
    auto fv = free_vars(e);
    vars.insert(fv.begin(), fv.end());
  }
  Sampler sampler(vars, seed);
  std::vector<std::vector<double>> out;
  const int max_draws = std::max(64, count * 16);
  for (int draw = 0; draw < max_draws && static_cast<int>(out.size()) < count; ++draw) {
    const Point p = sampler.next();
    std::vector<double> row;
    try {
      for (const auto& e : exprs) row.push_back(eval_numeric(e, p));
    } catch (const DomainError&) {
      continue;
    }
    out.push_back(std::move(row));
    if (vars.empty()) break;
  }
  if (out.empty() || (!vars.empty() && static_cast<int>(out.size()) < count)) {
    throw SamplingError("too few sample points inside the safe domain");
  }
  return out;
}

bool equiv(const Expr& a, const Expr& b, const SampleConfig& config) {
  const Expr d = a - b;
  if (is_structurally_zero(d)) return true;
  const auto rows = sample_values({a, b}, config.samples, config.seed);
  for (const auto& r : rows) {
    const double scale = std::max({1.0, std::fabs(r[0]), std::fabs(r[1])});
    if (std::fabs(r[0] - r[1]) > config.tolerance * scale) return false;
  }
  return true;
}

bool sampled_nonzero(const Expr& e, const SampleConfig& config) {
  if (is_structurally_zero(e)) return false;
  const auto rows = sample_values({e}, config.samples, config.seed);
  for (const auto& r : rows) {
    if (std::fabs(r[0]) <= config.tolerance) return false;
  }
  return true;
}

}  // namespace liereduce
