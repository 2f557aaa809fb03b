#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qipm/qlsa_sim.hpp"
#include "qipm/types.hpp"

namespace qipm {

enum class BackendId { Exact, ConjugateGradient, QlsaSim };

std::string_view backend_name(BackendId id);
/// Accepts "exact", "cg" and "qlsa"; throws InputError otherwise.
BackendId parse_backend(std::string_view name);

struct SolveMeta {
  BackendId backend_id = BackendId::Exact;
  /// ‖M d − f‖₂ of the returned d.
  double residual_norm = 0.0;
  std::optional<double> kappa_estimate;
  double frobenius_norm = 0.0;
  /// Backend-specific work proxy: flops for the classical solvers, the
  /// cost-model units for the simulated quantum solver.
  double cost_units = 0.0;
  int retries = 0;
  /// CG only: false when max_iters ran out before the tolerance was met.
  bool converged = true;
  int iterations = 0;
  /// QLSA only: ‖d̃ − d‖∞ against the internally computed exact solution.
  double direction_error = 0.0;
};

struct SolveResult {
  Vector d;
  SolveMeta meta;
};

/// Dense LU with partial pivoting. Throws SingularMatrixError when the
/// reciprocal condition estimate is below machine epsilon.
SolveResult solve_exact(const Matrix& M, const Vector& f);

/// Conjugate gradient on the normal equations MᵀM d = Mᵀf, stopping when
/// ‖Md − f‖ ≤ tol‖f‖. Non-convergence is reported through meta.converged.
SolveResult solve_cg(const Matrix& M, const Vector& f, double tol, int max_iters);

struct QlsaOptions {
  /// Total attempts allowed before giving up on the swap-test check.
  int retry_c = 4;
  qlsa::Sampling sampling = qlsa::Sampling::Multinomial;
};

/// Simulated quantum linear-system solve. The system is embedded into the
/// Hermitian [[0, M], [Mᵀ, 0]] of size n′ = 2·dim; its normalized solution
/// is read out by tomography at precision ε and checked with the swap-test
/// criterion (up to retry_c attempts), rescaled by an ε-multiplicative norm
/// estimate, and sign-fixed against the largest entry of f. Throws
/// BackendFailure when every attempt fails the check.
SolveResult solve_qlsa_sim(const Matrix& M, const Vector& f, double epsilon, std::uint64_t rng_seed,
                           const QlsaOptions& options = {});

/// Flips d when row r of M d disagrees in sign with f_r, r = argmax |f_r|.
/// Returns true when a flip happened.
bool fix_global_sign(const Matrix& M, const Vector& f, Vector& d);

}  // namespace qipm
