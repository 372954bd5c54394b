#pragma once

#include <string>
#include <vector>

#include "liereduce/reduction.hpp"
#include "liereduce/transform.hpp"

namespace liereduce {

enum class Verdict { point, nonlocal, inconclusive };

const char* verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::inconclusive;
  /// Offending variable for nonlocal verdicts, unresolved condition otherwise.
  std::string witness;
  /// Rule that decided the verdict.
  std::string criterion;
  std::vector<std::string> coordinates;
  std::vector<Expr> coefficients;
};

/// Pushes X through the chart; point when every coefficient lives on the
/// reduced coordinates and the result is a point symmetry there, nonlocal when
/// a coefficient mentions the canonical coordinate.
Classification classify_pushforward(const VectorField& X, const PointTransformation& T,
                                    const std::vector<AuxDef>& aux, const ReducedSystem& reduced,
                                    const SampleConfig& config = {});

/// Decides whether a point symmetry Y of the reduced system is the first
/// prolongation of a point symmetry of the translation-invariant parent with
/// u-free coefficients. Such a lift has xi = xi(x) and eta = b u + A(x), so Y
/// must have alpha-free base components, components phi_j affine in alpha
/// with d(phi_j)/d(alpha_k) = -d(xi_k)/dx_j (k != j), a common constant
/// b_j = d(phi_j)/d(alpha_j) + d(xi_j)/dx_j, and a curl-free alpha = 0 part.
/// Throws PreconditionError when Y is not a symmetry of the reduced system.
Classification lift_test(const VectorField& Y, const ReducedSystem& reduced,
                         const SampleConfig& config = {});

}  // namespace liereduce
