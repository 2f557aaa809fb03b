#include "qipm/terminate.hpp"

#include "qipm/error.hpp"
#include "qipm/solvers.hpp"

namespace qipm {
namespace {

constexpr double kMultiplierRegularization = 1e-12;

Matrix gather_columns(const Matrix& A, const std::vector<Index>& cols) {
  Matrix out(A.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = A.col(cols[j]);
  return out;
}

Vector gather(const Vector& v, const std::vector<Index>& idx) {
  Vector out(static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out(static_cast<Index>(j)) = v(idx[j]);
  return out;
}

}  // namespace

std::string_view status_name(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "Optimal";
    case LpStatus::PrimalInfeasible:
      return "PrimalInfeasible";
    case LpStatus::DualInfeasible:
      return "DualInfeasible";
    case LpStatus::InfeasibleOrUnbounded:
      return "InfeasibleOrUnbounded";
  }
  return "Unknown";
}

SupportSplit support_set(const HsdState& state) {
  SupportSplit split;
  for (Index j = 0; j < state.x.size(); ++j) {
    if (state.x(j) >= state.s(j)) {
      split.zeta.push_back(j);
    } else {
      split.complement.push_back(j);
    }
  }
  return split;
}

SupportSplit support_set(const HsdInstance& instance, const HsdState& state) {
  SupportSplit split = support_set(state);
  split.B_cols = gather_columns(instance.problem.A, split.zeta);
  split.C_cols = gather_columns(instance.problem.A, split.complement);
  return split;
}

ProjectionConstraints projection_constraints(const HsdInstance& instance, const HsdState& state,
                                             const SupportSplit& split) {
  const Matrix& B = split.B_cols;
  const Vector& b = instance.problem.b;
  const Vector c_B = gather(instance.problem.c, split.zeta);
  const Index m = instance.m();
  const Index p = static_cast<Index>(split.zeta.size());
  const bool tau_case = state.tau >= state.k;

  // Unknowns (y, x_B, t) with t = τ or k. Rows: B x_B (m), Bᵀy (p), gap (1).
  ProjectionConstraints pc;
  const Index nz = m + p + 1;
  pc.C = Matrix::Zero(m + p + 1, nz);
  pc.h = Vector::Zero(m + p + 1);
  pc.C.block(0, m, m, p) = B;
  pc.C.block(m, 0, p, m) = -B.transpose();
  pc.C.block(m + p, 0, 1, m) = b.transpose();
  pc.C.block(m + p, m, 1, p) = -c_B.transpose();
  if (tau_case) {
    pc.C.block(0, m + p, m, 1) = -b;
    pc.C.block(m, m + p, p, 1) = c_B;
  } else {
    pc.C(m + p, m + p) = -1.0;
  }

  pc.anchor.resize(nz);
  pc.anchor.head(m) = state.y;
  pc.anchor.segment(m, p) = gather(state.x, split.zeta);
  pc.anchor(m + p) = tau_case ? state.tau : state.k;
  return pc;
}

ProjectedPoint project(const HsdInstance& instance, const HsdState& state, const SupportSplit& split) {
  if (split.B_cols.cols() != static_cast<Index>(split.zeta.size()) ||
      split.B_cols.rows() != instance.m()) {
    throw InputError("project: split has no column data; build it with support_set(instance, state)");
  }
  const ProjectionConstraints pc = projection_constraints(instance, state, split);
  const Index nz = pc.C.cols();
  const Index nc = pc.C.rows();

  Matrix K = Matrix::Zero(nz + nc, nz + nc);
  K.topLeftCorner(nz, nz).setIdentity();
  K.topRightCorner(nz, nc) = pc.C.transpose();
  K.bottomLeftCorner(nc, nz) = pc.C;
  K.bottomRightCorner(nc, nc) = -kMultiplierRegularization * Matrix::Identity(nc, nc);
  Vector rhs(nz + nc);
  rhs << pc.anchor, pc.h;

  Vector sol = solve_exact(K, rhs).d;
  // One refinement pass; the regularized block makes K poorly conditioned
  // when C is rank deficient.
  sol += solve_exact(K, rhs - K * sol).d;

  const Vector z = sol.head(nz);
  const Index m = instance.m();
  const Index p = static_cast<Index>(split.zeta.size());
  ProjectedPoint out;
  out.which = state.tau >= state.k ? ProjectionCase::TauDominant : ProjectionCase::KappaDominant;
  out.y = z.head(m);
  out.x_B = z.segment(m, p);
  if (out.which == ProjectionCase::TauDominant) {
    out.tau = z(m + p);
  } else {
    out.k = z(m + p);
  }
  out.constraint_residual = (pc.C * z - pc.h).norm();
  out.distance = (z - pc.anchor).norm();
  return out;
}

LpSolution classify_infeasibility(const HsdInstance& instance, const Vector& x, const Vector& y,
                                  const Vector& s) {
  const LpProblem& lp = instance.problem;
  LpSolution out;
  out.x_star = x;
  out.y_star = y;
  out.s_star = s;
  out.objective_primal = lp.c.dot(x);
  out.objective_dual = lp.b.dot(y);
  const bool dual_infeasible = out.objective_primal < 0.0;
  const bool primal_infeasible = -out.objective_dual < 0.0;
  if (primal_infeasible) {
    out.status = LpStatus::PrimalInfeasible;
  } else if (dual_infeasible) {
    out.status = LpStatus::DualInfeasible;
  } else {
    out.status = LpStatus::InfeasibleOrUnbounded;
  }
  return out;
}

LpSolution recover(const HsdInstance& instance, const ProjectedPoint& projected,
                   const SupportSplit& split, const HsdState& /*state*/, double eps3) {
  const LpProblem& lp = instance.problem;
  const Index n = instance.n();
  Vector x = Vector::Zero(n);
  for (std::size_t j = 0; j < split.zeta.size(); ++j) {
    x(split.zeta[j]) = projected.x_B(static_cast<Index>(j));
  }
  const double tau_star = projected.which == ProjectionCase::TauDominant ? projected.tau : 0.0;

  if (tau_star > eps3) {
    LpSolution out;
    out.status = LpStatus::Optimal;
    out.x_star = x / tau_star;
    out.y_star = projected.y / tau_star;
    out.s_star = Vector::Zero(n);
    const Vector slack = lp.c - lp.A.transpose() * out.y_star;
    for (Index j : split.complement) out.s_star(j) = slack(j);
    out.objective_primal = lp.c.dot(out.x_star);
    out.objective_dual = lp.b.dot(out.y_star);
    return out;
  }
  Vector s = Vector::Zero(n);
  const Vector slack = -lp.A.transpose() * projected.y;
  for (Index j : split.complement) s(j) = slack(j);
  return classify_infeasibility(instance, x, projected.y, s);
}

}  // namespace qipm
