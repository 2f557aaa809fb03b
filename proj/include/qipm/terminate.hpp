#pragma once

#include <string_view>
#include <vector>

#include "qipm/lp_model.hpp"

namespace qipm {

/// ζ = {j : xⱼ ≥ sⱼ} and its complement, with the matching columns of A.
struct SupportSplit {
  std::vector<Index> zeta;
  std::vector<Index> complement;
  Matrix B_cols;
  Matrix C_cols;
};

SupportSplit support_set(const HsdState& state);
/// Same split, with B_cols/C_cols filled from the instance's A.
SupportSplit support_set(const HsdInstance& instance, const HsdState& state);

enum class ProjectionCase {
  /// τ ≥ k: nearest (y, x_B, τ) with B x_B = bτ, Bᵀy = c_Bτ, bᵀy = c_Bᵀx_B.
  TauDominant,
  /// τ < k: nearest (y, x_B, k) with B x_B = 0, Bᵀy = 0, bᵀy − c_Bᵀx_B = k.
  KappaDominant,
};

struct ProjectedPoint {
  ProjectionCase which = ProjectionCase::TauDominant;
  Vector y;
  /// Values on ζ, in the order of SupportSplit::zeta.
  Vector x_B;
  /// τ in the TauDominant case, 0 otherwise.
  double tau = 0.0;
  /// k in the KappaDominant case, 0 otherwise.
  double k = 0.0;
  /// ‖C z‖ of the constraint system at the solution.
  double constraint_residual = 0.0;
  /// Distance from the iterate, the minimized objective.
  double distance = 0.0;
};

/// Constraint matrix C and right-hand side h of the projection, over the
/// stacked unknowns (y, x_B, τ|k). Exposed so independent checks can
/// reproduce the feasible set.
struct ProjectionConstraints {
  Matrix C;
  Vector h;
  Vector anchor;  // (y^t, x_B^t, τ^t|k^t)
};
ProjectionConstraints projection_constraints(const HsdInstance& instance, const HsdState& state,
                                             const SupportSplit& split);

/// Equality-constrained least squares through the saddle-point system
///   [ I   Cᵀ  ] [z]   [anchor]
///   [ C  −δI  ] [λ] = [  h   ],  δ = 1e-12,
/// solved with the exact backend.
ProjectedPoint project(const HsdInstance& instance, const HsdState& state, const SupportSplit& split);

enum class LpStatus { Optimal, PrimalInfeasible, DualInfeasible, InfeasibleOrUnbounded };

std::string_view status_name(LpStatus status);

struct LpSolution {
  Vector x_star;
  Vector y_star;
  Vector s_star;
  double objective_primal = 0.0;
  double objective_dual = 0.0;
  LpStatus status = LpStatus::Optimal;
};

/// Infeasibility classification from a τ → 0 iterate: cᵀx < 0 certifies an
/// infeasible dual, −bᵀy < 0 an infeasible primal. When both fire the primal
/// verdict is reported; when neither fires the result is InfeasibleOrUnbounded.
LpSolution classify_infeasibility(const HsdInstance& instance, const Vector& x, const Vector& y,
                                  const Vector& s);

/// Builds the LP answer from a projection: for τ* > eps3, x* = (x_B, 0)/τ*,
/// y* = y/τ*, s* = c − Aᵀy* restricted to the complement (s_B = 0);
/// otherwise the infeasibility tests decide.
LpSolution recover(const HsdInstance& instance, const ProjectedPoint& projected,
                   const SupportSplit& split, const HsdState& state, double eps3);

}  // namespace qipm
