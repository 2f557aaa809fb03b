#pragma once

#include "qipm/types.hpp"

namespace qipm {

struct MatrixStats {
  double kappa = 0.0;
  double frobenius = 0.0;
  double spectral = 0.0;
  Index rows = 0;
  Index cols = 0;
};

/// σ_max / σ_min from a full SVD. Returns +infinity when σ_min is zero to
/// working precision. Throws InputError for non-square input.
double condition_number(const Matrix& M);

double frobenius_norm(const Matrix& M);

MatrixStats matrix_stats(const Matrix& M);

/// Largest corrector error ε′ for which an exact corrector output in
/// N(1/(4√2)) perturbed by ε′(x1, s1) provably stays in N(1/4), to first order:
///
///            ((2 − √2)/8) · x0ᵀs0/(n+1)
///   ε′ ≤ ─────────────────────────────────────────────────────────────────
///        √(‖X1 s0‖² − (x1ᵀs0)²/(n+1)) + √(‖X0 s1‖² − (x0ᵀs1)²/(n+1))
///          − (x1ᵀs0 + x0ᵀs1)/(4(n+1))
///
/// All vectors have length n+1. A nonpositive denominator means the bound
/// imposes no constraint and +infinity is returned.
double epsilon_prime_threshold(const Vector& x0, const Vector& s0, const Vector& x1,
                               const Vector& s1);

}  // namespace qipm
