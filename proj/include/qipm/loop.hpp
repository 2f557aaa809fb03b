#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qipm/central_path.hpp"
#include "qipm/kp_tree.hpp"
#include "qipm/newton.hpp"
#include "qipm/solvers.hpp"
#include "qipm/terminate.hpp"

namespace qipm {

struct SolverConfig {
  BackendId backend = BackendId::Exact;
  /// Per-solve precision of the simulated quantum backend.
  double epsilon = 1e-8;
  double eps1 = 1e-8;
  double eps2 = 1e-8;
  double eps3 = 1e-8;
  /// Step cap (predictor and corrector steps each count one); 0 picks
  /// default_max_iterations().
  int max_iterations = 0;
  double beta_inner = 0.25;
  double beta_outer = 0.5;
  std::uint64_t seed = 0;
  int retry_c = 4;
  qlsa::Sampling sampling = qlsa::Sampling::Multinomial;
  double cg_tolerance = 1e-12;
  /// 0 means 10 × system size.
  int cg_max_iterations = 0;
  int max_restoration_steps = 20;
  /// qlsa backend only: put −r(v), the equality residual of the iterate,
  /// into the upper right-hand side so noisy directions and restoration
  /// drift are corrected by the next step. Exact and CG solves keep the zero
  /// upper right-hand side; for them r(v) is rounding noise, and feeding it
  /// back spoils the orthogonality of late, tiny predictor directions.
  bool residual_feedback = true;

  /// Throws InputError unless 0 < beta_inner < beta_outer < 1 and all
  /// tolerances are positive.
  void validate() const;
};

/// ⌈20 √(n+1) ln((n+1) / min(ε₁ε₃², ε₂ε₃))⌉
int default_max_iterations(Index n, double eps1, double eps2, double eps3);

struct TraceRow {
  int t = 0;
  int gamma = 0;
  double mu = 0.0;
  double tau = 0.0;
  double theta = 0.0;
  std::optional<double> delta;
  double proximity = 0.0;
  double kappa = 0.0;
  double frobenius = 0.0;
  double cost_units = 0.0;
  int restoration_steps = 0;
  double residual_norm = 0.0;
};

/// Newton system of the current iterate together with its sampling-tree
/// mirror. Each refresh rewrites only the state-dependent entries.
class StepWorkspace {
 public:
  StepWorkspace(const HsdInstance& instance, const HsdState& state);

  /// Rewrites the 2(n+1) matrix entries and the n+1 right-hand-side entries
  /// that depend on the iterate, in both the dense system and the trees.
  /// With `upper_rhs` the first m+n+2 right-hand-side entries are set too.
  void refresh(const HsdState& state, int gamma, const Vector* upper_rhs = nullptr);

  const NewtonSystem& system() const { return system_; }
  const MatrixStore& store() const { return store_; }
  const SamplingTree& rhs_tree() const { return rhs_tree_; }
  int last_matrix_leaves() const { return last_matrix_leaves_; }
  int last_rhs_entries() const { return last_rhs_entries_; }

 private:
  NewtonSystem system_;
  MatrixStore store_;
  SamplingTree rhs_tree_;
  int last_matrix_leaves_ = 0;
  int last_rhs_entries_ = 0;
};

struct StepLength {
  double delta = 1.0;
  /// min(1/2, √(μ / (8‖D_x d_s‖))), the guaranteed-inside seed (1 for a
  /// zero direction).
  double delta0 = 1.0;
  bool delta0_inside = true;
  int probes = 0;
};

/// Largest δ ∈ (0, 1] (to 1e-4) with v + δd interior and in N(beta_outer).
/// Throws StepLengthError when no δ ≥ 1e-12 qualifies.
StepLength find_step_length(const HsdState& state, const Direction& direction, double beta_outer);

HsdState advance(const HsdState& state, const Direction& direction, double delta);

struct StepResult {
  HsdState state;
  Direction direction;
  TraceRow row;
  SolveMeta meta;
  std::optional<StepLength> step_length;
  std::optional<RestorationOutcome> restoration;
  /// Corrector only: proximity of v + d before any restoration.
  double raw_proximity = 0.0;
};

/// γ = 0 solve, complementarity shift, step-length search. `t` labels the
/// trace row and selects the RNG substream.
StepResult predictor_step(const HsdInstance& instance, const HsdState& state, const SolverConfig& config,
                          StepWorkspace& workspace, int t = 0);
/// γ = 1 solve, complementarity shift, full step, restoration into
/// N(beta_inner) when needed. Throws RestorationError when restoration fails.
StepResult corrector_step(const HsdInstance& instance, const HsdState& state, const SolverConfig& config,
                          StepWorkspace& workspace, int t = 0);

enum class Termination { Continue, Optimal, TauCollapse };

/// τ ≤ ε₃ is checked first; Optimal needs (x/τ)ᵀ(s/τ) ≤ ε₁ and
/// (θ/τ)‖(b̄, c̄)‖ ≤ ε₂.
Termination check_termination(const HsdInstance& instance, const HsdState& state, const SolverConfig& config);

enum class RunStatus {
  Optimal,
  PrimalInfeasible,
  DualInfeasible,
  InfeasibleOrUnbounded,
  NonConverged,
  BackendFailure,
  RestorationFailure,
};

std::string_view run_status_name(RunStatus status);

/// Per-step details not carried by the trace CSV.
struct StepDiagnostics {
  int gamma = 0;
  double mu_before = 0.0;
  double mu_after = 0.0;
  double delta = 1.0;
  double delta0 = 1.0;
  bool delta0_inside = true;
  /// |d_x̄ᵀd_s̄| / (‖d_x̄‖‖d_s̄‖), 0 for a zero direction.
  double orthogonality = 0.0;
  double direction_error = 0.0;
  double raw_proximity = 0.0;
  int restoration_steps = 0;
  double max_restoration_displacement = 0.0;
  int matrix_leaves_touched = 0;
  int rhs_entries_touched = 0;
};

struct SolveReport {
  RunStatus status = RunStatus::NonConverged;
  Termination termination = Termination::Continue;
  std::optional<LpSolution> solution;
  HsdInstance instance;
  HsdState final_state;
  std::vector<TraceRow> trace;
  std::vector<StepDiagnostics> steps;
  /// Variables of the problem as given, before standardization.
  Index original_variables = 0;
  int max_iterations = 0;
  std::string message;

  int iterations() const { return static_cast<int>(trace.size()); }
};

/// Standardize, embed, alternate predictor and corrector steps until a
/// termination criterion fires or the step cap is reached. Backend and
/// restoration failures are reported through the status with the trace so
/// far; InputError propagates.
SolveReport run(const LpProblem& problem, const SolverConfig& config);

}  // namespace qipm
