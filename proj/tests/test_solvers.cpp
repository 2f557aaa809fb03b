#include <doctest.h>

#include <cmath>
#include <random>

#include "qipm/error.hpp"
#include "qipm/rng.hpp"
#include "qipm/solvers.hpp"

using namespace qipm;

namespace {

Matrix well_conditioned(Index n, std::uint64_t seed) {
  Engine rng(seed);
  std::normal_distribution<double> z;
  Matrix M = Matrix::NullaryExpr(n, n, [&] { return z(rng); });
  M += 2.0 * std::sqrt(static_cast<double>(n)) * Matrix::Identity(n, n);
  return M;
}

Vector random_vector(Index n, std::uint64_t seed) {
  Engine rng(seed);
  std::normal_distribution<double> z;
  return Vector::NullaryExpr(n, [&] { return z(rng); });
}

}  // namespace

TEST_CASE("backend names") {
  CHECK(parse_backend("exact") == BackendId::Exact);
  CHECK(parse_backend("cg") == BackendId::ConjugateGradient);
  CHECK(parse_backend("qlsa") == BackendId::QlsaSim);
  CHECK_THROWS_AS(parse_backend("lu"), InputError);
  for (BackendId b : {BackendId::Exact, BackendId::ConjugateGradient, BackendId::QlsaSim}) {
    CHECK(parse_backend(backend_name(b)) == b);
  }
}

TEST_CASE("exact solver") {
  const Vector f = random_vector(5, 1);
  CHECK((solve_exact(Matrix::Identity(5, 5), f).d - f).norm() == 0.0);
  Matrix D = Matrix::Zero(3, 3);
  D.diagonal() << 2, 4, 8;
  Vector g(3);
  g << 1, 1, 1;
  const SolveResult r = solve_exact(D, g);
  CHECK(r.d(0) == doctest::Approx(0.5));
  CHECK(r.d(1) == doctest::Approx(0.25));
  CHECK(r.d(2) == doctest::Approx(0.125));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Matrix M = well_conditioned(12, s);
    const Vector h = random_vector(12, s + 100);
    const SolveResult out = solve_exact(M, h);
    CHECK(out.meta.residual_norm <= 1e-10 * h.norm());
    CHECK(out.meta.residual_norm == doctest::Approx((M * out.d - h).norm()).epsilon(1e-6));
  }
  CHECK_THROWS_AS(solve_exact(Matrix::Ones(3, 3), g), SingularMatrixError);
  CHECK_THROWS_AS(solve_exact(Matrix::Ones(3, 2), g), InputError);
}

TEST_CASE("conjugate gradient") {
  const Vector f = random_vector(6, 2);
  const SolveResult id = solve_cg(Matrix::Identity(6, 6), f, 1e-12, 60);
  CHECK(id.meta.converged);
  CHECK((id.d - f).norm() <= 1e-12 * f.norm());
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Matrix R = well_conditioned(10, s + 20);
    const Matrix spd = R.transpose() * R;
    const Vector h = random_vector(10, s + 30);
    const SolveResult cg = solve_cg(spd, h, 1e-12, 200);
    CHECK(cg.meta.converged);
    CHECK((cg.d - solve_exact(spd, h).d).norm() <= 1e-8 * solve_exact(spd, h).d.norm());
  }
  const Matrix M = well_conditioned(10, 40);
  const SolveResult one = solve_cg(M, random_vector(10, 41), 1e-12, 1);
  CHECK_FALSE(one.meta.converged);
  CHECK(one.meta.iterations == 1);
}

TEST_CASE("qlsa simulation: error shrinks with epsilon") {
  const Matrix M = well_conditioned(8, 5);
  const Vector f = random_vector(8, 6);
  const Vector exact = solve_exact(M, f).d;
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {0.3, 0.1, 0.03}) {
    double mean_dev = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const SolveResult r = solve_qlsa_sim(M, f, eps, s);
      const double dev = (r.d - exact).norm() / exact.norm();
      CHECK(dev <= 2.0 * std::sqrt(7.0) * eps);
      CHECK(r.meta.direction_error == doctest::Approx((r.d - exact).cwiseAbs().maxCoeff()));
      CHECK(r.meta.residual_norm == doctest::Approx((M * r.d - f).norm()));
      mean_dev += dev / 10.0;
    }
    CHECK(mean_dev < prev);
    prev = mean_dev;
  }
}

TEST_CASE("qlsa simulation: right-hand side equal to a column") {
  const Matrix M = well_conditioned(6, 7);
  for (Index j = 0; j < 6; ++j) {
    const SolveResult r = solve_qlsa_sim(M, M.col(j), 0.1, 10 + static_cast<std::uint64_t>(j));
    for (Index i = 0; i < 6; ++i) {
      if (i == j) {
        CHECK(std::abs(r.d(i) - 1.0) <= 0.1 * (1.0 + 1e-9));
      } else {
        CHECK(std::abs(r.d(i)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("qlsa simulation: reproducible per seed") {
  const Matrix M = well_conditioned(7, 8);
  const Vector f = random_vector(7, 9);
  const SolveResult a = solve_qlsa_sim(M, f, 0.1, 42);
  const SolveResult b = solve_qlsa_sim(M, f, 0.1, 42);
  const SolveResult c = solve_qlsa_sim(M, f, 0.1, 43);
  CHECK(a.d == b.d);
  CHECK(a.meta.cost_units == b.meta.cost_units);
  CHECK(a.d != c.d);
  CHECK(a.meta.cost_units > 0.0);
  CHECK(*a.meta.kappa_estimate >= 1.0);
  CHECK_THROWS_AS(solve_qlsa_sim(M, f, 1.0, 1), InputError);
}

TEST_CASE("global sign fix") {
  const Matrix M = well_conditioned(5, 11);
  const Vector f = random_vector(5, 12);
  Vector d = -solve_exact(M, f).d;
  CHECK(fix_global_sign(M, f, d));
  CHECK((M * d - f).norm() <= 1e-10 * f.norm());
  CHECK_FALSE(fix_global_sign(M, f, d));
}
