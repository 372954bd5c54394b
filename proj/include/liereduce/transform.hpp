#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liereduce/desystem.hpp"

namespace liereduce {

/// Change of base coordinates (x, u) -> (r, s). `forward` gives each target
/// base coordinate (independent first) in source coordinates; `inverse`, when
/// present, gives each source base coordinate in target coordinates.
/// `canonical` is the index of the target dependent variable that the
/// symmetry translates.
struct PointTransformation {
  JetSpace source;
  JetSpace target;
  std::vector<Expr> forward;
  std::vector<Expr> inverse;
  int canonical = 0;

  bool has_inverse() const { return !inverse.empty(); }
  std::string canonical_name() const { return target.dependent()[canonical]; }
};

PointTransformation make_transformation(const JetSpace& source, std::vector<std::string> target_independent,
                                        std::vector<std::string> target_dependent,
                                        std::vector<Expr> forward, std::vector<Expr> inverse = {},
                                        int canonical = 0);

Expr jacobian_determinant(const PointTransformation& T);

/// Checks the invariants: sampled nonzero Jacobian and, when an inverse is
/// given, both compositions reduce to the identity. Throws PreconditionError.
void validate(const PointTransformation& T, const SampleConfig& config = {});

/// X r_i == 0 for every target coordinate except the canonical one, and
/// X s == 1.
bool verify_canonical(const VectorField& X, const PointTransformation& T,
                      const SampleConfig& config = {});

/// Canonical coordinates from the catalog: translations, diagonal scalings and
/// fiber fields f(x) u d/du. Nothing when X fits none of them.
std::optional<PointTransformation> catalog_chart(const VectorField& X,
                                                 std::vector<std::string> target_independent = {},
                                                 std::vector<std::string> target_dependent = {});

/// Source jet variables in terms of target jets (needs the inverse).
class SourceJets {
 public:
  explicit SourceJets(const PointTransformation& T);
  /// Bindings for the base coordinates and every jet of e.
  Bindings bindings_for(const Expr& e);
  Expr jet(const JetVar& v);

 private:
  const PointTransformation& T_;
  std::vector<std::vector<Expr>> minv_;  // minv_[j][i]: D_j = sum_i minv_[j][i] Dhat_i
  std::map<std::string, Expr> cache_;
};

/// Target jet variables in terms of source jets (forward map only).
class TargetJets {
 public:
  explicit TargetJets(const PointTransformation& T);
  Expr jet(const JetVar& v);

 private:
  const PointTransformation& T_;
  std::vector<std::vector<Expr>> ainv_;  // s_{K,i} = sum_j ainv_[i][j] D_j s_K
  std::map<std::string, Expr> cache_;
};

/// Rewrites an expression in source jets as one in target jets.
Expr transform_expr(const Expr& e, const PointTransformation& T);

/// Transformed system in target coordinates, equations tidied.
DESystem transform_de(const DESystem& sys, const PointTransformation& T);

/// True when each equation of a vanishes on the solutions of b and vice
/// versa, i.e. the systems agree up to nonvanishing factors.
bool same_system(const DESystem& a, const DESystem& b, const SampleConfig& config = {});

/// Auxiliary variable defined as a target jet, e.g. alpha = s'.
struct AuxDef {
  std::string name;
  JetVar target_jet;
};

/// Source-coordinate definition of an auxiliary variable.
Expr aux_source(const PointTransformation& T, const AuxDef& aux);

struct Pushforward {
  std::vector<std::string> coordinates;  // target independents, aux names, other dependents
  std::vector<Expr> coefficients;
  /// True when some coefficient still holds source variables.
  bool raw = false;
  std::set<std::string> leftover;
};

/// Action of prolong(X) on the target coordinates and auxiliary variables,
/// re-expressed through the inverse and the auxiliary definitions. The
/// canonical coordinate is left out unless `aux` is empty.
Pushforward pushforward_field(const VectorField& X, const PointTransformation& T,
                              const std::vector<AuxDef>& aux);

}  // namespace liereduce
