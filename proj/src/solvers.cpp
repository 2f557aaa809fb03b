#include "qipm/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "qipm/diagnostics.hpp"
#include "qipm/error.hpp"
#include "qipm/kernels.hpp"
#include "qipm/rng.hpp"

namespace qipm {

std::string_view backend_name(BackendId id) {
  switch (id) {
    case BackendId::Exact:
      return "exact";
    case BackendId::ConjugateGradient:
      return "cg";
    case BackendId::QlsaSim:
      return "qlsa";
  }
  return "unknown";
}

BackendId parse_backend(std::string_view name) {
  if (name == "exact") return BackendId::Exact;
  if (name == "cg") return BackendId::ConjugateGradient;
  if (name == "qlsa") return BackendId::QlsaSim;
  throw InputError("unknown backend \"" + std::string(name) + "\" (expected exact, cg or qlsa)");
}

namespace {

void require_square(const Matrix& M, const Vector& f) {
  if (M.rows() != M.cols()) throw InputError("linear system matrix must be square");
  if (f.size() != M.rows()) throw InputError("right-hand side length does not match the matrix");
}

Vector lu_solve(const Matrix& M, const Vector& f) {
  Eigen::PartialPivLU<Matrix> lu(M);
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
    throw SingularMatrixError("matrix is singular to working precision");
  }
  return lu.solve(f);
}

}  // namespace

SolveResult solve_exact(const Matrix& M, const Vector& f) {
  require_square(M, f);
  SolveResult out;
  out.d = lu_solve(M, f);
  const double dim = static_cast<double>(M.rows());
  out.meta.backend_id = BackendId::Exact;
  out.meta.residual_norm = (M * out.d - f).norm();
  out.meta.frobenius_norm = M.norm();
  out.meta.cost_units = 2.0 / 3.0 * dim * dim * dim + 2.0 * dim * dim;
  return out;
}

SolveResult solve_cg(const Matrix& M, const Vector& f, double tol, int max_iters) {
  require_square(M, f);
  const Index dim = M.rows();
  SolveResult out;
  out.meta.backend_id = BackendId::ConjugateGradient;
  out.meta.frobenius_norm = M.norm();

  Vector d = Vector::Zero(dim);
  Vector r = f;
  const double fnorm = f.norm();
  const double stop = tol * fnorm;
  Vector z, w, p;
  kernels::omp::matvec_transposed(M, r, z);
  p = z;
  double zz = z.squaredNorm();
  int it = 0;
  bool converged = r.norm() <= stop;
  while (!converged && it < max_iters) {
    kernels::omp::matvec(M, p, w);
    const double ww = w.squaredNorm();
    if (ww == 0.0) break;
    const double alpha = zz / ww;
    d += alpha * p;
    r -= alpha * w;
    ++it;
    if (r.norm() <= stop) {
      // Confirm against the true residual; the recursion drifts slightly.
      Vector true_r;
      kernels::omp::matvec(M, d, true_r);
      true_r = f - true_r;
      r = true_r;
      if (r.norm() <= stop) {
        converged = true;
        break;
      }
    }
    kernels::omp::matvec_transposed(M, r, z);
    const double zz_new = z.squaredNorm();
    p = z + (zz_new / zz) * p;
    zz = zz_new;
  }

  out.d = std::move(d);
  out.meta.iterations = it;
  out.meta.converged = converged;
  out.meta.residual_norm = (M * out.d - f).norm();
  out.meta.cost_units = 4.0 * static_cast<double>(it) * static_cast<double>(dim * dim);
  return out;
}

bool fix_global_sign(const Matrix& M, const Vector& f, Vector& d) {
  Index r = 0;
  if (f.size() == 0 || f.cwiseAbs().maxCoeff(&r) == 0.0) return false;
  const double product = M.row(r).dot(d);
  if ((product < 0.0) != (f(r) < 0.0) && product != 0.0) {
    d = -d;
    return true;
  }
  return false;
}

SolveResult solve_qlsa_sim(const Matrix& M, const Vector& f, double epsilon, std::uint64_t rng_seed,
                           const QlsaOptions& options) {
  require_square(M, f);
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("qlsa epsilon must lie in (0, 1)");
  if (options.retry_c < 1) throw InputError("qlsa retry count must be at least 1");

  const Index dim = M.rows();
  const Index n_prime = 2 * dim;

  // Stand-in for the prepared quantum state: the exact solution of the
  // symmetrized system [[0, M], [Mᵀ, 0]] (0; d) = (f; 0).
  const Vector d_exact = lu_solve(M, f);
  const MatrixStats stats = matrix_stats(M);

  SolveResult out;
  out.meta.backend_id = BackendId::QlsaSim;
  out.meta.frobenius_norm = stats.frobenius;
  out.meta.kappa_estimate = stats.kappa;

  const double true_norm = d_exact.stableNorm();
  if (true_norm == 0.0) {
    out.d = Vector::Zero(dim);
    out.meta.residual_norm = f.norm();
    return out;
  }
  Vector z = Vector::Zero(n_prime);
  z.tail(dim) = d_exact / true_norm;
  z /= z.stableNorm();

  // The block encoding needs spectral norm ≤ 1, so costs use ‖H‖_F / ‖H‖₂.
  const double scaled_frobenius = std::sqrt(2.0) * stats.frobenius / stats.spectral;
  const qlsa::QlsaCost cost = qlsa::qlsa_cost(scaled_frobenius, stats.kappa, epsilon, n_prime);

  int attempt = 0;
  std::optional<qlsa::TomographyOutcome> accepted;
  double copies = 0.0;
  for (; attempt < options.retry_c; ++attempt) {
    qlsa::TomographyOutcome tomo = qlsa::tomography(
        z, epsilon, derive_seed(rng_seed, "tomography", static_cast<std::uint64_t>(attempt)),
        options.sampling);
    copies += 2.0 * static_cast<double>(tomo.copies_used);
    if (qlsa::fidelity_check(tomo.estimate, z, epsilon)) {
      accepted = std::move(tomo);
      break;
    }
  }
  out.meta.retries = std::min(attempt, options.retry_c - 1);
  out.meta.cost_units = copies * cost.prepare_cost + cost.norm_cost;
  if (!accepted) {
    throw BackendFailure("tomography failed the swap-test check in all " +
                         std::to_string(options.retry_c) + " attempts");
  }

  const double scale = qlsa::norm_estimate(true_norm, epsilon, derive_seed(rng_seed, "norm-estimate"));
  out.d = accepted->estimate.tail(dim) * scale;
  fix_global_sign(M, f, out.d);

  out.meta.residual_norm = (M * out.d - f).norm();
  out.meta.direction_error = (out.d - d_exact).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace qipm
