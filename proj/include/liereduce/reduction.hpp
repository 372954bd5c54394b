#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liereduce/desystem.hpp"

namespace liereduce {

/// How solutions of the reduced system map back: alpha_i = du/dx_i and
/// u = (quadrature of alpha) + C.
struct Connection {
  std::string eliminated;
  std::vector<std::string> aux;
  std::vector<Expr> definitions;  // parent jet symbols u_i
  std::string constant = "C";
};

struct ReducedSystem {
  DESystem parent;
  DESystem system;
  Connection connection;

  int integrability_count() const;
};

/// Replaces y^(k) by alpha^(k-1).
ReducedSystem reduce_ode(const DESystem& sys, const std::string& aux = "alpha",
                         const std::string& target = "");

/// Replaces u_J by alpha_{min J} differentiated along the rest of J, and
/// appends d(alpha_i)/dx_j - d(alpha_j)/dx_i = 0 for i < j. Other dependent
/// variables are kept.
ReducedSystem reduce_pde(const DESystem& sys, const std::string& target,
                         std::vector<std::string> aux = {});

/// Dispatches on the number of independent variables.
ReducedSystem reduce(const DESystem& sys, const std::string& target, std::vector<std::string> aux = {});

std::vector<std::string> default_aux_names(int p);

/// Expression in the reduced space for a parent jet of the eliminated variable.
Expr reduced_jet(const ReducedSystem& r, const JetVar& parent_jet);

struct ConnectionCheck {
  bool ok = true;
  std::vector<std::string> notes;
};

/// Either direction may be supplied. The parent direction checks that u
/// solves the parent and grad u the reduced system. The reduced direction
/// checks the reduced solution and then, with an antiderivative U, that
/// grad U matches and U + C solves the parent for each constant; without U
/// the parent is checked with its jets replaced by derivatives of alpha.
ConnectionCheck verify_connection(const ReducedSystem& r, const std::optional<Candidate>& parent_solution,
                                  const std::optional<Candidate>& reduced_solution,
                                  const std::optional<Expr>& antiderivative,
                                  const std::vector<Rational>& constants = {0, 1, -2},
                                  const SampleConfig& config = {});

}  // namespace liereduce
