#pragma once

// Independent reference computations used as test oracles. None of these
// call into the solver code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Vertex {
  Vector x;
  double value = 0.0;
};

/// min cᵀx s.t. Ax = b, x ≥ 0 by enumerating every basis of size rank(A) = m.
/// Returns nullopt when no basic feasible solution exists.
inline std::optional<Vertex> enumerate_vertices(const Matrix& A, const Vector& b, const Vector& c,
                                                double feas_tol = 1e-9) {
  const Index m = A.rows();
  const Index n = A.cols();
  std::optional<Vertex> best;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - m, pick.end(), 1);
  do {
    std::vector<Index> cols;
    for (Index j = 0; j < n; ++j) {
      if (pick[static_cast<std::size_t>(j)]) cols.push_back(j);
    }
    Matrix B(m, m);
    for (Index k = 0; k < m; ++k) B.col(k) = A.col(cols[static_cast<std::size_t>(k)]);
    Eigen::FullPivLU<Matrix> lu(B);
    if (lu.rank() < m) continue;
    const Vector xb = lu.solve(b);
    if ((B * xb - b).norm() > 1e-9 * (1.0 + b.norm())) continue;
    if ((xb.array() < -feas_tol).any()) continue;
    Vector x = Vector::Zero(n);
    for (Index k = 0; k < m; ++k) x(cols[static_cast<std::size_t>(k)]) = std::max(0.0, xb(k));
    const double v = c.dot(x);
    if (!best || v < best->value) best = Vertex{x, v};
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

/// min cᵀx s.t. Ax ≥ b, x ≥ 0: every vertex is the solution of n active
/// constraints picked from the m+n rows of [A; I].
inline std::optional<Vertex> enumerate_vertices_inequality(const Matrix& A, const Vector& b, const Vector& c) {
  const Index m = A.rows();
  const Index n = A.cols();
  Matrix G(m + n, n);
  G << A, Matrix::Identity(n, n);
  Vector h(m + n);
  h << b, Vector::Zero(n);
  std::optional<Vertex> best;
  std::vector<int> pick(static_cast<std::size_t>(m + n), 0);
  std::fill(pick.end() - n, pick.end(), 1);
  do {
    Matrix S(n, n);
    Vector r(n);
    Index k = 0;
    for (Index i = 0; i < m + n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) {
        S.row(k) = G.row(i);
        r(k) = h(i);
        ++k;
      }
    }
    Eigen::FullPivLU<Matrix> lu(S);
    if (lu.rank() < n) continue;
    const Vector x = lu.solve(r);
    if (((G * x - h).array() < -1e-9).any()) continue;
    const double v = c.dot(x);
    if (!best || v < best->value) best = Vertex{x, v};
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

/// Euclidean projection of `a` onto {z : Cz = h} through a complete
/// orthogonal decomposition of C (minimum-norm correction).
inline Vector nullspace_projection(const Matrix& C, const Vector& h, const Vector& a) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(C);
  return a - cod.solve(C * a - h);
}

/// Basis of the nullspace of C via full SVD.
inline Matrix nullspace_basis(const Matrix& C, double tol = 1e-10) {
  Eigen::JacobiSVD<Matrix> svd(C, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  Index rank = 0;
  const double cut = tol * std::max<double>(1.0, sv.size() ? sv(0) : 0.0);
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  return svd.matrixV().rightCols(C.cols() - rank);
}

/// Upper α-quantile of χ²(k) by the Wilson–Hilferty approximation.
inline double chi2_quantile(int k, double z) {
  const double kk = static_cast<double>(k);
  const double t = 1.0 - 2.0 / (9.0 * kk) + z * std::sqrt(2.0 / (9.0 * kk));
  return kk * t * t * t;
}
/// z-score of the 99% one-sided normal quantile.
inline constexpr double kZ99 = 2.3263478740408408;

/// Pearson statistic over cells with positive expected count.
inline double chi2_statistic(const std::vector<std::int64_t>& counts, const std::vector<double>& probs,
                             std::int64_t total, int* dof = nullptr) {
  double stat = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double e = probs[i] * static_cast<double>(total);
    if (e <= 0.0) continue;
    const double d = static_cast<double>(counts[i]) - e;
    stat += d * d / e;
    ++cells;
  }
  if (dof) *dof = cells - 1;
  return stat;
}

/// Loop-based re-evaluation of the corrector error threshold quotient.
inline double epsilon_prime(const std::vector<double>& x0, const std::vector<double>& s0,
                            const std::vector<double>& x1, const std::vector<double>& s1) {
  const std::size_t n1 = x0.size();
  const double N = static_cast<double>(n1);
  double gap = 0, a2 = 0, a1 = 0, b2 = 0, b1 = 0;
  for (std::size_t i = 0; i < n1; ++i) {
    gap += x0[i] * s0[i];
    a2 += (x1[i] * s0[i]) * (x1[i] * s0[i]);
    a1 += x1[i] * s0[i];
    b2 += (x0[i] * s1[i]) * (x0[i] * s1[i]);
    b1 += x0[i] * s1[i];
  }
  const double num = (2.0 - std::sqrt(2.0)) / 8.0 * gap / N;
  const double den = std::sqrt(std::max(0.0, a2 - a1 * a1 / N)) + std::sqrt(std::max(0.0, b2 - b1 * b1 / N)) -
                     (a1 + b1) / (4.0 * N);
  if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
  return num / den;
}

}  // namespace oracle
