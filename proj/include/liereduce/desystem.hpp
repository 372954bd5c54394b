#pragma once

#include <string>
#include <vector>

#include "liereduce/equiv.hpp"
#include "liereduce/jet.hpp"

namespace liereduce {

enum class Role { equation, reduced, integrability };

const char* role_name(Role r);

struct Equation {
  Expr expr;            // required to vanish
  JetVar leader;        // leader = rhs on solutions
  Expr rhs;
  Role role = Role::equation;
};

/// Equations with one solved form each. Solved forms are found automatically:
/// the leader is a highest-order jet variable in which the equation is affine,
/// preferring a dependent variable no earlier equation is solved for. When a
/// solved form mentions another leader, all leaders are solved jointly.
class DESystem {
 public:
  DESystem() = default;
  DESystem(JetSpace space, std::vector<Expr> equations, std::vector<Role> roles = {});

  const JetSpace& space() const { return space_; }
  const std::vector<Equation>& equations() const { return equations_; }
  std::vector<Expr> exprs() const;
  int order() const;

  /// Replaces leaders and their total derivatives until none remain (at most
  /// `max_passes` rounds).
  Expr on_manifold(const Expr& e, int max_passes = 10) const;

  std::string render() const;

 private:
  JetSpace space_;
  std::vector<Equation> equations_;
};

struct SymmetryReport {
  bool symmetry = false;
  std::vector<Expr> residuals;
};

SymmetryReport check_point_symmetry(const DESystem& sys, const VectorField& X,
                                    const SampleConfig& config = {});

using Candidate = std::map<std::string, Expr>;

/// Substitutes u^mu = candidate[mu] and all derivatives it needs.
std::vector<Expr> solution_residuals(const DESystem& sys, const Candidate& candidate);
bool verify_solution(const DESystem& sys, const Candidate& candidate,
                     const SampleConfig& config = {});

/// Strips denominators, common monomial content and exp factors, and fixes the
/// sign so the first term is positive. The result vanishes exactly where e
/// does, up to the removed nonvanishing factors.
Expr tidy_equation(const Expr& e);

}  // namespace liereduce
