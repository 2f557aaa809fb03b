#include "qipm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "qipm/error.hpp"

namespace qipm {

MatrixStats matrix_stats(const Matrix& M) {
  MatrixStats out;
  out.rows = M.rows();
  out.cols = M.cols();
  out.frobenius = M.norm();
  if (M.size() == 0) return out;

  Eigen::BDCSVD<Matrix> svd(M);
  const Vector& sv = svd.singularValues();
  out.spectral = sv(0);
  const double smin = sv(sv.size() - 1);
  const double floor = std::numeric_limits<double>::epsilon() * std::max(M.rows(), M.cols()) * sv(0);
  out.kappa = (smin <= floor || smin == 0.0) ? std::numeric_limits<double>::infinity() : sv(0) / smin;
  return out;
}

double condition_number(const Matrix& M) {
  if (M.rows() != M.cols()) throw InputError("condition_number expects a square matrix");
  return matrix_stats(M).kappa;
}

double frobenius_norm(const Matrix& M) {
  return std::sqrt(M.array().square().sum());
}

double epsilon_prime_threshold(const Vector& x0, const Vector& s0, const Vector& x1,
                               const Vector& s1) {
  const Index len = x0.size();
  if (s0.size() != len || x1.size() != len || s1.size() != len || len == 0) {
    throw InputError("epsilon_prime_threshold: vectors must share a nonzero length");
  }
  const double n1 = static_cast<double>(len);
  const double numerator = (2.0 - std::sqrt(2.0)) / 8.0 * x0.dot(s0) / n1;

  auto centred_norm = [n1](const Vector& a, const Vector& b) {
    const double sq = a.cwiseProduct(b).squaredNorm() - std::pow(a.dot(b), 2) / n1;
    return std::sqrt(std::max(sq, 0.0));
  };
  const double denominator = centred_norm(x1, s0) + centred_norm(x0, s1) -
                             (x1.dot(s0) + x0.dot(s1)) / (4.0 * n1);
  if (!(denominator > 0.0)) return std::numeric_limits<double>::infinity();
  return numerator / denominator;
}

}  // namespace qipm
