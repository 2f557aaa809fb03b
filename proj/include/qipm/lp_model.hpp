#pragma once

#include <optional>
#include <utility>

#include "qipm/types.hpp"

namespace qipm {

enum class ProblemForm { StandardEquality, Inequality };

/// Dense LP data. StandardEquality means min cᵀx s.t. Ax = b, x ≥ 0;
/// Inequality means min cᵀx s.t. Ax ≥ b, x ≥ 0.
struct LpProblem {
  Matrix A;
  Vector b;
  Vector c;
  ProblemForm form = ProblemForm::StandardEquality;

  Index rows() const { return A.rows(); }
  Index cols() const { return A.cols(); }

  /// Throws InputError on empty data, dimension mismatch or non-finite entries.
  void validate() const;
};

/// Converts Inequality input to StandardEquality by appending one surplus
/// column per row: A' = [A | -I], c' = (c, 0). Equality input is returned as-is.
LpProblem standardize(const LpProblem& problem);

/// Homogeneous self-dual embedding of a standard-form problem together with
/// the starting point it was built around.
struct HsdInstance {
  LpProblem problem;
  Vector b_bar;
  Vector c_bar;
  double z_bar = 0.0;
  Vector x0;
  Vector s0;
  Vector y0;

  Index m() const { return problem.rows(); }
  Index n() const { return problem.cols(); }
  /// Dimension of the unsymmetrized Newton system, m + 2n + 3.
  Index n_prime() const { return m() + 2 * n() + 3; }
  /// x0ᵀs0 + 1, the right-hand side of the normalization row.
  double normalization() const { return x0.dot(s0) + 1.0; }
};

/// Iterate v = (y, x, τ, θ, s, k).
struct HsdState {
  Vector y;
  Vector x;
  double tau = 1.0;
  double theta = 1.0;
  Vector s;
  double k = 1.0;

  /// (x, τ)
  Vector x_bar() const;
  /// (s, k)
  Vector s_bar() const;
  /// True when x, s, τ, k are all strictly positive.
  bool interior() const;
};

struct Residuals {
  Vector r1;  // Ax − bτ + b̄θ
  Vector r2;  // −Aᵀy + cτ − c̄θ − s
  double r3 = 0.0;  // bᵀy − cᵀx + z̄θ − k
  double r4 = 0.0;  // normalization row

  double norm() const;
};

/// Builds the embedding around (x0, s0, y0); omitted vectors take the
/// default start x0 = s0 = 1, y0 = 0. The returned state has τ = θ = k = 1.
std::pair<HsdInstance, HsdState> embed(const LpProblem& problem,
                                       std::optional<Vector> x0 = std::nullopt,
                                       std::optional<Vector> s0 = std::nullopt,
                                       std::optional<Vector> y0 = std::nullopt);

Residuals residuals(const HsdInstance& instance, const HsdState& state);

}  // namespace qipm
