#include "qipm/central_path.hpp"

#include <algorithm>
#include <cmath>

#include "qipm/error.hpp"

namespace qipm {

double mu(const HsdState& v) {
  const double n1 = static_cast<double>(v.x.size() + 1);
  return (v.x.dot(v.s) + v.tau * v.k) / n1;
}

NeighborhoodCheck proximity(const HsdState& v, double beta) {
  NeighborhoodCheck out;
  out.beta = beta;
  out.mu = mu(v);
  Vector w = v.x_bar().cwiseProduct(v.s_bar());
  out.proximity = (w.array() - out.mu).matrix().norm();
  out.inside = out.proximity <= beta * out.mu;
  return out;
}

GEval g_eval(const Vector& x_bar, const Vector& s_bar, double beta) {
  if (x_bar.size() != s_bar.size() || x_bar.size() == 0) {
    throw InputError("g_eval: x_bar and s_bar must be non-empty and of equal length");
  }
  const double n1 = static_cast<double>(x_bar.size());
  const double B = (beta * beta + n1) / (n1 * n1);
  const Vector w = x_bar.cwiseProduct(s_bar);
  const double W = w.sum();

  GEval out;
  out.g = w.squaredNorm() - B * W * W;
  const Vector centred = (w.array() - B * W).matrix();
  out.grad_x = 2.0 * s_bar.cwiseProduct(centred);
  out.grad_s = 2.0 * x_bar.cwiseProduct(centred);
  return out;
}

namespace {

// First-order decrease coefficient D: g(x̄ − εgₓ, s̄ − εgₛ) ≈ g − 4εD with
// D = Σᵢ (x̄ᵢ² + s̄ᵢ²)(x̄ᵢs̄ᵢ − BΣⱼx̄ⱼs̄ⱼ)².
double decrease_coefficient(const Vector& xb, const Vector& sb, double beta) {
  const double n1 = static_cast<double>(xb.size());
  const double B = (beta * beta + n1) / (n1 * n1);
  const Vector w = xb.cwiseProduct(sb);
  const double W = w.sum();
  const Vector centred = (w.array() - B * W).matrix();
  return ((xb.array().square() + sb.array().square()) * centred.array().square()).sum();
}

}  // namespace

RestorationOutcome restore(const HsdState& state, double beta, int max_steps) {
  if (!state.interior()) throw InputError("restore: state is not interior");

  const Index n = state.x.size();
  Vector xb = state.x_bar();
  Vector sb = state.s_bar();

  RestorationOutcome out;
  GEval ge = g_eval(xb, sb, beta);
  while (ge.g > 0.0 && out.steps_taken < max_steps) {
    const double D = decrease_coefficient(xb, sb, beta);
    if (!(D > 0.0)) break;  // stationary point; cannot happen with g > 0
    double step = ge.g / (4.0 * D);

    Vector xn, sn;
    for (int halvings = 0;; ++halvings) {
      xn = xb - step * ge.grad_x;
      sn = sb - step * ge.grad_s;
      if ((xn.array() > 0.0).all() && (sn.array() > 0.0).all()) break;
      if (halvings > 60) throw InputError("restore: positivity guard exhausted");
      step *= 0.5;
    }
    const double disp = std::max((xn - xb).cwiseAbs().maxCoeff(), (sn - sb).cwiseAbs().maxCoeff());
    out.max_step_displacement = std::max(out.max_step_displacement, disp);
    out.epsilon_double_prime_used = step;
    xb = std::move(xn);
    sb = std::move(sn);
    ++out.steps_taken;
    ge = g_eval(xb, sb, beta);
  }

  out.state = state;
  out.state.x = xb.head(n);
  out.state.tau = xb(n);
  out.state.s = sb.head(n);
  out.state.k = sb(n);
  out.final_g = ge.g;
  out.converged = ge.g <= 0.0;
  return out;
}

}  // namespace qipm
