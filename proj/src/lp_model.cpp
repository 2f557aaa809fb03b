#include "qipm/lp_model.hpp"

#include <cmath>
#include <string>

#include "qipm/error.hpp"

namespace qipm {

void LpProblem::validate() const {
  if (A.rows() < 1 || A.cols() < 1) {
    throw InputError("constraint matrix must have at least one row and column");
  }
  if (b.size() != A.rows()) {
    throw InputError("b has length " + std::to_string(b.size()) + ", expected " +
                     std::to_string(A.rows()));
  }
  if (c.size() != A.cols()) {
    throw InputError("c has length " + std::to_string(c.size()) + ", expected " +
                     std::to_string(A.cols()));
  }
  if (!A.allFinite() || !b.allFinite() || !c.allFinite()) {
    throw InputError("problem data contains NaN or Inf");
  }
}

LpProblem standardize(const LpProblem& problem) {
  problem.validate();
  if (problem.form == ProblemForm::StandardEquality) return problem;

  const Index m = problem.rows();
  const Index n = problem.cols();
  LpProblem out;
  out.A.resize(m, n + m);
  out.A.leftCols(n) = problem.A;
  out.A.rightCols(m) = -Matrix::Identity(m, m);
  out.b = problem.b;
  out.c = Vector::Zero(n + m);
  out.c.head(n) = problem.c;
  out.form = ProblemForm::StandardEquality;
  return out;
}

Vector HsdState::x_bar() const {
  Vector v(x.size() + 1);
  v << x, tau;
  return v;
}

Vector HsdState::s_bar() const {
  Vector v(s.size() + 1);
  v << s, k;
  return v;
}

bool HsdState::interior() const {
  return tau > 0.0 && k > 0.0 && (x.array() > 0.0).all() && (s.array() > 0.0).all();
}

double Residuals::norm() const {
  return std::sqrt(r1.squaredNorm() + r2.squaredNorm() + r3 * r3 + r4 * r4);
}

std::pair<HsdInstance, HsdState> embed(const LpProblem& problem, std::optional<Vector> x0,
                                       std::optional<Vector> s0, std::optional<Vector> y0) {
  problem.validate();
  if (problem.form != ProblemForm::StandardEquality) {
    throw InputError("embed expects a standard equality-form problem");
  }
  const Index m = problem.rows();
  const Index n = problem.cols();

  HsdInstance inst;
  inst.problem = problem;
  inst.x0 = x0 ? std::move(*x0) : Vector::Ones(n);
  inst.s0 = s0 ? std::move(*s0) : Vector::Ones(n);
  inst.y0 = y0 ? std::move(*y0) : Vector::Zero(m);
  if (inst.x0.size() != n || inst.s0.size() != n || inst.y0.size() != m) {
    throw InputError("starting point dimensions do not match the problem");
  }
  if (!(inst.x0.array() > 0.0).all() || !(inst.s0.array() > 0.0).all()) {
    throw InputError("starting x0 and s0 must be strictly positive");
  }

  const Matrix& A = problem.A;
  inst.b_bar = problem.b - A * inst.x0;
  inst.c_bar = problem.c - A.transpose() * inst.y0 - inst.s0;
  inst.z_bar = problem.c.dot(inst.x0) + 1.0 - problem.b.dot(inst.y0);

  HsdState state;
  state.y = inst.y0;
  state.x = inst.x0;
  state.s = inst.s0;
  state.tau = 1.0;
  state.theta = 1.0;
  state.k = 1.0;
  return {std::move(inst), std::move(state)};
}

Residuals residuals(const HsdInstance& inst, const HsdState& v) {
  const LpProblem& p = inst.problem;
  Residuals r;
  r.r1 = p.A * v.x - p.b * v.tau + inst.b_bar * v.theta;
  r.r2 = -p.A.transpose() * v.y + p.c * v.tau - inst.c_bar * v.theta - v.s;
  r.r3 = p.b.dot(v.y) - p.c.dot(v.x) + inst.z_bar * v.theta - v.k;
  const double norm = inst.normalization();
  r.r4 = inst.s0.dot(v.x) + inst.x0.dot(v.s) + v.tau + v.k - norm * v.theta - norm;
  return r;
}

}  // namespace qipm
