#pragma once

#include <cstdint>

#include "qipm/lp_model.hpp"

namespace qipm {

/// A standard-form problem built around a known strictly complementary
/// primal-dual optimum.
struct GeneratedInstance {
  LpProblem problem;
  Vector x_star;
  Vector y_star;
  Vector s_star;
  double optimal_value = 0.0;
};

/// A ~ U(−1, 1)^{m×n}; a random basis of size m carries x* ~ U(0.5, 2), the
/// other columns carry s* ~ U(0.5, 2); y* ~ U(−1, 1); b = Ax*, c = Aᵀy* + s*.
/// Deterministic in (seed, n, m, index) through the "instance-gen" stream.
GeneratedInstance generate_instance(Index n, Index m, std::uint64_t seed, std::uint64_t index = 0);

/// x₁ = −1 with x ≥ 0: no feasible point, dual unbounded.
LpProblem infeasible_primal_example();
/// min −x₁ s.t. x₁ − x₂ = 0: primal unbounded, dual infeasible.
LpProblem unbounded_primal_example();

}  // namespace qipm
