#pragma once

#include "qipm/lp_model.hpp"

namespace qipm {

/// μ = (xᵀs + τk)/(n+1).
double mu(const HsdState& state);

struct NeighborhoodCheck {
  double mu = 0.0;
  /// ‖(Xs; τk) − μ1‖₂
  double proximity = 0.0;
  double beta = 0.0;
  bool inside = false;
};

/// Membership in N(β); uses the non-strict comparison proximity ≤ βμ.
NeighborhoodCheck proximity(const HsdState& state, double beta);

/// Value and gradient of the neighborhood functional
///   g(x̄, s̄) = Σ x̄ᵢ²s̄ᵢ² − B (Σ x̄ᵢs̄ᵢ)²,  B = (β² + (n+1)) / (n+1)²,
/// which equals ‖X̄s̄ − μ1‖² − β²μ², so g ≤ 0 exactly on N(β).
struct GEval {
  double g = 0.0;
  Vector grad_x;
  Vector grad_s;
};

GEval g_eval(const Vector& x_bar, const Vector& s_bar, double beta);

struct RestorationOutcome {
  HsdState state;
  int steps_taken = 0;
  double final_g = 0.0;
  /// Step size of the last gradient step (0 when no step was taken).
  double epsilon_double_prime_used = 0.0;
  /// Largest ∞-norm displacement of (x̄, s̄) caused by a single step.
  double max_step_displacement = 0.0;
  bool converged = false;
};

/// Pulls an iterate back into N(β) by gradient steps on g over the
/// concatenated (x, τ), (s, k) vectors. Each step size zeroes g to first
/// order; it is halved while any coordinate would leave the positive orthant.
/// y and θ are left untouched, so equality feasibility drifts by O(step²).
/// Throws InputError for non-interior input; `converged` is false when
/// max_steps were used without reaching g ≤ 0.
RestorationOutcome restore(const HsdState& state, double beta, int max_steps = 20);

}  // namespace qipm
