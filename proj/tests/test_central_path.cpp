#include <doctest.h>

#include <cmath>
#include <random>

#include "qipm/central_path.hpp"
#include "qipm/error.hpp"
#include "qipm/rng.hpp"

using namespace qipm;

namespace {

HsdState ones(Index n) {
  HsdState v;
  v.y = Vector::Zero(1);
  v.x = Vector::Ones(n);
  v.s = Vector::Ones(n);
  return v;
}

}  // namespace

TEST_CASE("mu on simple states") {
  CHECK(mu(ones(2)) == doctest::Approx(1.0));
  HsdState v = ones(5);
  v.x *= 2.0;
  v.s *= 2.0;
  v.tau = v.k = 2.0;
  CHECK(mu(v) == doctest::Approx(4.0));

  Engine rng(1);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 20; ++i) {
    HsdState w = ones(7);
    double acc = 0.0;
    for (Index j = 0; j < 7; ++j) {
      w.x(j) = u(rng);
      w.s(j) = u(rng);
      acc += w.x(j) * w.s(j);
    }
    w.tau = u(rng);
    w.k = u(rng);
    acc += w.tau * w.k;
    CHECK(mu(w) == doctest::Approx(acc / 8.0).epsilon(1e-14));
  }
}

TEST_CASE("proximity examples") {
  const NeighborhoodCheck c0 = proximity(ones(2), 0.25);
  CHECK(c0.proximity == 0.0);
  CHECK(c0.inside);
  CHECK(proximity(ones(2), 0.0).inside);

  HsdState v = ones(2);
  v.x(0) = 2.0;
  const NeighborhoodCheck c = proximity(v, 0.25);
  CHECK(c.mu == doctest::Approx(4.0 / 3.0));
  CHECK(c.proximity == doctest::Approx(std::sqrt(6.0) / 3.0));
  CHECK_FALSE(c.inside);
}

TEST_CASE("g at the all-ones point") {
  const Vector one = Vector::Ones(3);
  const GEval ge = g_eval(one, one, 0.25);
  CHECK(ge.g == doctest::Approx(-1.0 / 16.0));
  CHECK_THROWS_AS(g_eval(one, Vector::Ones(2), 0.25), InputError);
}

TEST_CASE("on-path points are strictly inside") {
  Engine rng(5);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 10; ++i) {
    const Vector x = Vector::NullaryExpr(6, [&] { return u(rng); });
    const Vector s = (2.5 * x.cwiseInverse()).eval();
    CHECK(g_eval(x, s, 0.3).g < 0.0);
  }
}

TEST_CASE("g gradient matches central differences") {
  Engine rng(7);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  const double h = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = Vector::NullaryExpr(5, [&] { return u(rng); });
    const Vector s = Vector::NullaryExpr(5, [&] { return u(rng); });
    const GEval ge = g_eval(x, s, 0.25);
    for (Index i = 0; i < 5; ++i) {
      Vector xp = x, xm = x, sp = s, sm = s;
      xp(i) += h;
      xm(i) -= h;
      sp(i) += h;
      sm(i) -= h;
      const double dx = (g_eval(xp, s, 0.25).g - g_eval(xm, s, 0.25).g) / (2 * h);
      const double ds = (g_eval(x, sp, 0.25).g - g_eval(x, sm, 0.25).g) / (2 * h);
      CHECK(std::abs(dx - ge.grad_x(i)) < 1e-6);
      CHECK(std::abs(ds - ge.grad_s(i)) < 1e-6);
    }
  }
}

TEST_CASE("g sign agrees with neighborhood membership") {
  Engine rng(9);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  int disagreements = 0;
  int inside = 0;
  for (int i = 0; i < 1000; ++i) {
    HsdState v = ones(4);
    for (Index j = 0; j < 4; ++j) {
      v.x(j) = u(rng);
      v.s(j) = u(rng);
    }
    v.tau = u(rng);
    v.k = u(rng);
    const NeighborhoodCheck nc = proximity(v, 0.25);
    const bool g_inside = g_eval(v.x_bar(), v.s_bar(), 0.25).g <= 0.0;
    if (g_inside != nc.inside) ++disagreements;
    if (nc.inside) ++inside;
  }
  CHECK(disagreements == 0);
  CHECK(inside > 0);
  CHECK(inside < 1000);
}

TEST_CASE("restore: no-op inside, small perturbation stays inside") {
  const HsdState v = ones(3);
  const RestorationOutcome r0 = restore(v, 0.25);
  CHECK(r0.steps_taken == 0);
  CHECK(r0.converged);
  CHECK(r0.state.x == v.x);

  HsdState w = ones(3);
  w.x(0) = 1.0 + 1e-3;
  CHECK(g_eval(w.x_bar(), w.s_bar(), 0.25).g < 0.0);
  CHECK(restore(w, 0.25).steps_taken == 0);

  HsdState bad = ones(3);
  bad.x(1) = 0.0;
  CHECK_THROWS_AS(restore(bad, 0.25), InputError);
}

TEST_CASE("restore pulls a slightly outside point back with small displacement") {
  Engine rng(13);
  std::normal_distribution<double> noise(0.0, 1.0);
  const double beta = 0.25;
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 20; ++trial) {
    // Start on the boundary of N(β): Xs − μ1 along a random zero-mean direction.
    const Index n1 = 11;
    Vector dir = Vector::NullaryExpr(n1, [&] { return noise(rng); });
    dir.array() -= dir.mean();
    dir.normalize();
    const Vector w = (Vector::Ones(n1) + beta * 0.999 * dir).eval();
    Vector x = Vector::NullaryExpr(n1, [&] { return std::exp(0.3 * noise(rng)); });
    Vector s = w.cwiseQuotient(x);
    const double scale = 1e-4;
    for (Index i = 0; i < n1; ++i) {
      x(i) *= 1.0 + scale * noise(rng);
      s(i) *= 1.0 + scale * noise(rng);
    }
    HsdState v;
    v.y = Vector::Zero(2);
    v.x = x.head(n1 - 1);
    v.tau = x(n1 - 1);
    v.s = s.head(n1 - 1);
    v.k = s(n1 - 1);
    if (proximity(v, beta).inside) continue;
    ++tested;
    const RestorationOutcome r = restore(v, beta);
    CHECK(r.converged);
    CHECK(r.steps_taken <= 5);
    CHECK(proximity(r.state, beta).proximity <= beta * mu(r.state) * (1 + 1e-12));
    CHECK(r.max_step_displacement <= 10.0 * scale * std::max(x.maxCoeff(), s.maxCoeff()));
    CHECK(r.state.interior());
  }
  CHECK(tested >= 5);
}

TEST_CASE("restore preserves positivity") {
  Engine rng(17);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  for (int i = 0; i < 200; ++i) {
    HsdState v = ones(5);
    for (Index j = 0; j < 5; ++j) {
      v.x(j) = u(rng);
      v.s(j) = u(rng);
    }
    const RestorationOutcome r = restore(v, 0.25, 20);
    CHECK(r.state.interior());
  }
}
