#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qipm/loop.hpp"

namespace qipm {

inline constexpr const char* kTraceHeader =
    "t,gamma,mu,tau,theta,delta,proximity,kappa,frobenius,cost_units,restoration_steps,residual_norm";

/// Header plus one line per row; reals as %.12g, delta empty when absent.
std::string trace_csv(const std::vector<TraceRow>& rows);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Solution document in the order status, x, y, s, primal_objective,
/// dual_objective, iterations, trace_path. x and s are cut to the variables
/// of the problem as given. Without a recovered solution the last iterate,
/// scaled by 1/τ, is written.
std::string solution_json(const SolveReport& report, const std::string& trace_path);

struct SolutionDocument {
  std::string status;
  Vector x;
  Vector y;
  Vector s;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  int iterations = 0;
  std::string trace_path;
};

/// Throws InputError on malformed documents.
SolutionDocument parse_solution_json(const std::string& text);

}  // namespace qipm
