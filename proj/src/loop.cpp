#include "qipm/loop.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qipm/diagnostics.hpp"
#include "qipm/error.hpp"
#include "qipm/rng.hpp"

namespace qipm {

void SolverConfig::validate() const {
  if (!(0.0 < beta_inner && beta_inner < beta_outer && beta_outer < 1.0)) {
    throw InputError("neighborhood parameters must satisfy 0 < beta_inner < beta_outer < 1");
  }
  if (!(epsilon > 0.0 && eps1 > 0.0 && eps2 > 0.0 && eps3 > 0.0)) {
    throw InputError("epsilon, eps1, eps2 and eps3 must be positive");
  }
  if (backend == BackendId::QlsaSim && !(epsilon < 1.0)) {
    throw InputError("qlsa backend needs epsilon < 1");
  }
  if (max_iterations < 0) throw InputError("max_iterations must be non-negative");
  if (retry_c < 1) throw InputError("retry count must be at least 1");
  if (!(cg_tolerance > 0.0) || cg_max_iterations < 0) throw InputError("invalid CG settings");
  if (max_restoration_steps < 0) throw InputError("max_restoration_steps must be non-negative");
}

int default_max_iterations(Index n, double eps1, double eps2, double eps3) {
  const double np1 = static_cast<double>(n + 1);
  const double floor_eps = std::min(eps1 * eps3 * eps3, eps2 * eps3);
  const double bound = std::ceil(20.0 * std::sqrt(np1) * std::log(np1 / floor_eps));
  return static_cast<int>(std::clamp(bound, 1.0, 1e9));
}

StepWorkspace::StepWorkspace(const HsdInstance& instance, const HsdState& state)
    : system_(assemble(instance, state, 0)), store_(system_.M), rhs_tree_(system_.f) {}

void StepWorkspace::refresh(const HsdState& state, int gamma, const Vector* upper_rhs) {
  refresh_state_entries(system_, state, gamma);
  const std::vector<MatrixEntry> entries = state_dependent_entries(system_.layout, state);
  std::vector<MatrixStore::Entry> bulk;
  bulk.reserve(entries.size());
  for (const MatrixEntry& e : entries) bulk.push_back({e.row, e.col, e.value});
  last_matrix_leaves_ = store_.update_many(bulk);

  const BlockLayout& L = system_.layout;
  last_rhs_entries_ = 0;
  if (upper_rhs) {
    if (upper_rhs->size() != L.s()) throw InputError("upper right-hand side has the wrong length");
    for (Index i = 0; i < L.s(); ++i) {
      system_.f(i) = (*upper_rhs)(i);
      rhs_tree_.update(static_cast<std::size_t>(i), system_.f(i));
      ++last_rhs_entries_;
    }
  }
  for (Index i = L.s(); i <= L.k(); ++i) {
    rhs_tree_.update(static_cast<std::size_t>(i), system_.f(i));
    ++last_rhs_entries_;
  }
}

HsdState advance(const HsdState& v, const Direction& d, double delta) {
  HsdState out;
  out.y = v.y + delta * d.dy;
  out.x = v.x + delta * d.dx;
  out.tau = v.tau + delta * d.dtau;
  out.theta = v.theta + delta * d.dtheta;
  out.s = v.s + delta * d.ds;
  out.k = v.k + delta * d.dk;
  return out;
}

StepLength find_step_length(const HsdState& state, const Direction& dir, double beta_outer) {
  StepLength out;
  auto inside = [&](double delta) {
    ++out.probes;
    const HsdState probe = advance(state, dir, delta);
    return probe.interior() && proximity(probe, beta_outer).inside;
  };

  const double product = dir.dx_bar().cwiseProduct(dir.ds_bar()).norm();
  const double m = mu(state);
  // Capped at 1/2: beyond that (1 − δ)μ/4 no longer absorbs the μ/8 term.
  out.delta0 = product > 0.0 ? std::min(0.5, std::sqrt(m / (8.0 * product))) : 1.0;
  out.delta0_inside = inside(out.delta0);

  if (out.delta0 == 1.0 ? out.delta0_inside : inside(1.0)) {
    out.delta = 1.0;
    return out;
  }

  double lo = out.delta0;
  bool lo_inside = out.delta0_inside;
  while (!lo_inside) {
    lo *= 0.5;
    if (lo < 1e-12) throw StepLengthError("no admissible step length above 1e-12");
    lo_inside = inside(lo);
  }
  double hi = 1.0;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (inside(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.delta = lo;
  return out;
}

namespace {

SolveResult solve_direction(const NewtonSystem& sys, const SolverConfig& config, std::uint64_t seed) {
  switch (config.backend) {
    case BackendId::Exact:
      return solve_exact(sys.M, sys.f);
    case BackendId::ConjugateGradient: {
      const int cap = config.cg_max_iterations > 0 ? config.cg_max_iterations
                                                   : static_cast<int>(10 * sys.M.rows());
      SolveResult cg = solve_cg(sys.M, sys.f, config.cg_tolerance, cap);
      if (cg.meta.converged) return cg;
      // Fall back to LU; the work already spent still counts.
      SolveResult exact = solve_exact(sys.M, sys.f);
      exact.meta.backend_id = BackendId::ConjugateGradient;
      exact.meta.cost_units += cg.meta.cost_units;
      exact.meta.iterations = cg.meta.iterations;
      exact.meta.converged = false;
      return exact;
    }
    case BackendId::QlsaSim: {
      QlsaOptions opts;
      opts.retry_c = config.retry_c;
      opts.sampling = config.sampling;
      return solve_qlsa_sim(sys.M, sys.f, config.epsilon, seed, opts);
    }
  }
  throw InputError("unknown backend");
}

TraceRow make_row(const HsdInstance& inst, const HsdState& v, const StepWorkspace& ws,
                  const SolveMeta& meta, int t, int gamma) {
  TraceRow row;
  row.t = t;
  row.gamma = gamma;
  const NeighborhoodCheck nc = proximity(v, 1.0);
  row.mu = nc.mu;
  row.tau = v.tau;
  row.theta = v.theta;
  row.proximity = nc.proximity;
  row.kappa = meta.kappa_estimate ? *meta.kappa_estimate : condition_number(ws.system().M);
  row.frobenius = std::sqrt(ws.store().frobenius_squared());
  row.cost_units = meta.cost_units;
  row.residual_norm = residuals(inst, v).norm();
  return row;
}

struct SolvedDirection {
  Direction direction;
  SolveMeta meta;
};

SolvedDirection newton_direction(const HsdInstance& instance, const HsdState& state,
                                 const SolverConfig& config, StepWorkspace& ws, int gamma, int t) {
  if (config.residual_feedback && config.backend == BackendId::QlsaSim) {
    const Vector upper = -equality_residual(instance, state);
    ws.refresh(state, gamma, &upper);
  } else {
    ws.refresh(state, gamma);
  }
  const NewtonSystem& sys = ws.system();
  SolveResult res = solve_direction(sys, config, derive_seed(config.seed, "solve", static_cast<std::uint64_t>(t)));
  Direction d = Direction::unpack(res.d, sys.layout);
  d = complementarity_shift(state, d, gamma, sys.mu);
  return {std::move(d), res.meta};
}

}  // namespace

StepResult predictor_step(const HsdInstance& instance, const HsdState& state, const SolverConfig& config,
                          StepWorkspace& ws, int t) {
  SolvedDirection sd = newton_direction(instance, state, config, ws, 0, t);
  StepResult out;
  out.step_length = find_step_length(state, sd.direction, config.beta_outer);
  out.state = advance(state, sd.direction, out.step_length->delta);
  out.direction = std::move(sd.direction);
  out.meta = sd.meta;
  out.row = make_row(instance, out.state, ws, out.meta, t, 0);
  out.row.delta = out.step_length->delta;
  return out;
}

StepResult corrector_step(const HsdInstance& instance, const HsdState& state, const SolverConfig& config,
                          StepWorkspace& ws, int t) {
  SolvedDirection sd = newton_direction(instance, state, config, ws, 1, t);
  StepResult out;
  out.state = advance(state, sd.direction, 1.0);
  out.direction = std::move(sd.direction);
  out.meta = sd.meta;
  if (!out.state.interior()) {
    throw RestorationError("corrector step left the positive orthant at step " + std::to_string(t));
  }
  const NeighborhoodCheck raw = proximity(out.state, config.beta_inner);
  out.raw_proximity = raw.proximity;
  if (!raw.inside) {
    RestorationOutcome rest = restore(out.state, config.beta_inner, config.max_restoration_steps);
    if (!rest.converged) {
      throw RestorationError("restoration did not reach the inner neighborhood within " +
                             std::to_string(config.max_restoration_steps) + " steps at step " +
                             std::to_string(t));
    }
    out.state = rest.state;
    out.restoration = std::move(rest);
  }
  out.row = make_row(instance, out.state, ws, out.meta, t, 1);
  out.row.restoration_steps = out.restoration ? out.restoration->steps_taken : 0;
  return out;
}

Termination check_termination(const HsdInstance& instance, const HsdState& v, const SolverConfig& config) {
  if (v.tau <= config.eps3) return Termination::TauCollapse;
  const double gap = v.x.dot(v.s) / (v.tau * v.tau);
  const double bc = std::sqrt(instance.b_bar.squaredNorm() + instance.c_bar.squaredNorm());
  const double infeas = v.theta / v.tau * bc;
  if (gap <= config.eps1 && infeas <= config.eps2) return Termination::Optimal;
  return Termination::Continue;
}

std::string_view run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::Optimal:
      return "Optimal";
    case RunStatus::PrimalInfeasible:
      return "PrimalInfeasible";
    case RunStatus::DualInfeasible:
      return "DualInfeasible";
    case RunStatus::InfeasibleOrUnbounded:
      return "InfeasibleOrUnbounded";
    case RunStatus::NonConverged:
      return "NonConverged";
    case RunStatus::BackendFailure:
      return "BackendFailure";
    case RunStatus::RestorationFailure:
      return "RestorationFailure";
  }
  return "Unknown";
}

namespace {

RunStatus from_lp_status(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal:
      return RunStatus::Optimal;
    case LpStatus::PrimalInfeasible:
      return RunStatus::PrimalInfeasible;
    case LpStatus::DualInfeasible:
      return RunStatus::DualInfeasible;
    case LpStatus::InfeasibleOrUnbounded:
      return RunStatus::InfeasibleOrUnbounded;
  }
  return RunStatus::InfeasibleOrUnbounded;
}

StepDiagnostics diagnose(const StepResult& step, const HsdState& before, const StepWorkspace& ws) {
  StepDiagnostics d;
  d.gamma = step.row.gamma;
  d.mu_before = mu(before);
  d.mu_after = step.row.mu;
  if (step.step_length) {
    d.delta = step.step_length->delta;
    d.delta0 = step.step_length->delta0;
    d.delta0_inside = step.step_length->delta0_inside;
  }
  const Vector dx = step.direction.dx_bar();
  const Vector ds = step.direction.ds_bar();
  const double scale = dx.norm() * ds.norm();
  d.orthogonality = scale > 0.0 ? std::abs(dx.dot(ds)) / scale : 0.0;
  d.direction_error = step.meta.direction_error;
  d.raw_proximity = step.row.gamma == 1 ? step.raw_proximity : step.row.proximity;
  if (step.restoration) {
    d.restoration_steps = step.restoration->steps_taken;
    d.max_restoration_displacement = step.restoration->max_step_displacement;
  }
  d.matrix_leaves_touched = ws.last_matrix_leaves();
  d.rhs_entries_touched = ws.last_rhs_entries();
  return d;
}

}  // namespace

SolveReport run(const LpProblem& problem, const SolverConfig& config) {
  config.validate();
  problem.validate();
  SolveReport report;
  report.original_variables = problem.cols();
  auto [instance, state] = embed(standardize(problem));
  report.max_iterations = config.max_iterations > 0
                              ? config.max_iterations
                              : default_max_iterations(instance.n(), config.eps1, config.eps2, config.eps3);

  StepWorkspace ws(instance, state);
  int t = 0;
  bool predictor_next = true;
  try {
    while (true) {
      if (predictor_next) {
        report.termination = check_termination(instance, state, config);
        if (report.termination != Termination::Continue) break;
      }
      if (t >= report.max_iterations) {
        report.status = RunStatus::NonConverged;
        report.message = "step limit reached";
        break;
      }
      StepResult step = predictor_next ? predictor_step(instance, state, config, ws, t)
                                       : corrector_step(instance, state, config, ws, t);
      report.steps.push_back(diagnose(step, state, ws));
      report.trace.push_back(step.row);
      state = std::move(step.state);
      ++t;
      predictor_next = !predictor_next;
    }

    if (report.termination == Termination::Optimal) {
      const SupportSplit split = support_set(instance, state);
      const ProjectedPoint projected = project(instance, state, split);
      report.solution = recover(instance, projected, split, state, config.eps3);
      report.status = from_lp_status(report.solution->status);
    } else if (report.termination == Termination::TauCollapse) {
      report.solution = classify_infeasibility(instance, state.x, state.y, state.s);
      report.status = from_lp_status(report.solution->status);
    }
  } catch (const BackendFailure& e) {
    report.status = RunStatus::BackendFailure;
    report.message = e.what();
  } catch (const SingularMatrixError& e) {
    report.status = RunStatus::BackendFailure;
    report.message = e.what();
  } catch (const RestorationError& e) {
    report.status = RunStatus::RestorationFailure;
    report.message = e.what();
  } catch (const StepLengthError& e) {
    report.status = RunStatus::NonConverged;
    report.message = e.what();
  }
  report.instance = std::move(instance);
  report.final_state = std::move(state);
  return report;
}

}  // namespace qipm
