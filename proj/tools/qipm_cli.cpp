// qipm: command-line front end.
//
//   qipm solve --input lp.json [--backend exact|cg|qlsa] [--epsilon F] ...
//   qipm sweep --sizes 4,8,16 --count 10 [--backend exact,qlsa] [--workers N] ...
//
// Exit codes: 0 optimal, 1 usage or input error, 2 infeasible or unbounded,
// 3 not converged, 4 backend or restoration failure.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "qipm/error.hpp"
#include "qipm/instances.hpp"
#include "qipm/loop.hpp"
#include "qipm/lp_io.hpp"
#include "qipm/report_io.hpp"
#include "qipm/rng.hpp"

namespace {

using namespace qipm;

constexpr int kExitOptimal = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNonConverged = 3;
constexpr int kExitFailure = 4;

struct CommonFlags {
  std::string backend = "exact";
  double epsilon = 1e-8;
  std::optional<double> eps1;
  std::optional<double> eps2;
  double eps3 = 1e-8;
  std::uint64_t seed = 0;
  int max_iterations = 0;
  std::string sampling = "multinomial";
  int retry_c = 4;
  std::string trace_path;
  std::string output_path;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--epsilon", f.epsilon, "qlsa precision; default for eps1/eps2")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps1", f.eps1, "complementarity threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--eps2", f.eps2, "infeasibility threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--eps3", f.eps3, "tau collapse threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "base RNG seed");
  cmd->add_option("--max-iterations", f.max_iterations, "step cap (0 = default)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--sampling", f.sampling, "tomography sampling")
      ->check(CLI::IsMember({"multinomial", "pershot"}));
  cmd->add_option("--retry-c", f.retry_c, "tomography attempts per solve")->check(CLI::PositiveNumber);
  cmd->add_option("--trace", f.trace_path, "trace CSV path");
  cmd->add_option("--output", f.output_path, "output path (stdout when omitted)");
}

SolverConfig make_config(const CommonFlags& f, BackendId backend) {
  SolverConfig cfg;
  cfg.backend = backend;
  cfg.epsilon = f.epsilon;
  cfg.eps1 = f.eps1.value_or(f.epsilon);
  cfg.eps2 = f.eps2.value_or(f.epsilon);
  cfg.eps3 = f.eps3;
  cfg.seed = f.seed;
  cfg.max_iterations = f.max_iterations;
  cfg.retry_c = f.retry_c;
  cfg.sampling = f.sampling == "pershot" ? qlsa::Sampling::PerShot : qlsa::Sampling::Multinomial;
  cfg.validate();
  return cfg;
}

int exit_code(RunStatus s) {
  switch (s) {
    case RunStatus::Optimal:
      return kExitOptimal;
    case RunStatus::PrimalInfeasible:
    case RunStatus::DualInfeasible:
    case RunStatus::InfeasibleOrUnbounded:
      return kExitInfeasible;
    case RunStatus::NonConverged:
      return kExitNonConverged;
    case RunStatus::BackendFailure:
    case RunStatus::RestorationFailure:
      return kExitFailure;
  }
  return kExitFailure;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

int solve_command(const std::string& input, const CommonFlags& f) {
  const LpProblem problem = load_problem_json(input);
  const SolverConfig cfg = make_config(f, parse_backend(f.backend));
  const SolveReport report = run(problem, cfg);
  if (!f.trace_path.empty()) write_text_file(f.trace_path, trace_csv(report.trace));
  emit(f.output_path, solution_json(report, f.trace_path));
  if (!report.message.empty()) std::cerr << "qipm: " << report.message << "\n";
  return exit_code(report.status);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct SweepRun {
  Index n = 0;
  Index m = 0;
  int instance = 0;
  BackendId backend = BackendId::Exact;
  RunStatus status = RunStatus::NonConverged;
  int iterations = 0;
  double cost = 0.0;
  double max_kappa = 0.0;
  std::string trace;
  std::string error;
};

int sweep_command(const std::string& sizes_arg, int count, int workers, const CommonFlags& f) {
  std::vector<Index> sizes;
  for (const std::string& tok : split_list(sizes_arg)) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
      sizes.push_back(static_cast<Index>(v));
    } catch (const std::exception&) {
      throw InputError("invalid size \"" + tok + "\" in --sizes");
    }
  }
  if (sizes.empty()) throw InputError("--sizes must list at least one size");
  std::vector<BackendId> backends;
  for (const std::string& tok : split_list(f.backend)) backends.push_back(parse_backend(tok));
  if (backends.empty()) throw InputError("--backend must name at least one backend");
  std::vector<SolverConfig> configs;
  for (BackendId b : backends) configs.push_back(make_config(f, b));

  // Canonical order: (n, instance, backend).
  std::vector<SweepRun> runs;
  for (Index n : sizes) {
    for (int i = 0; i < count; ++i) {
      for (BackendId b : backends) {
        SweepRun r;
        r.n = n;
        r.m = (n + 1) / 2;
        r.instance = i;
        r.backend = b;
        runs.push_back(r);
      }
    }
  }

  const bool want_trace = !f.trace_path.empty();
  const auto total = static_cast<long>(runs.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (long idx = 0; idx < total; ++idx) {
    SweepRun& r = runs[static_cast<std::size_t>(idx)];
    try {
      const GeneratedInstance gen =
          generate_instance(r.n, r.m, f.seed, static_cast<std::uint64_t>(r.instance));
      SolverConfig cfg = configs[static_cast<std::size_t>(
          std::find(backends.begin(), backends.end(), r.backend) - backends.begin())];
      cfg.seed = derive_seed(f.seed, "sweep-solve", static_cast<std::uint64_t>(r.n),
                             static_cast<std::uint64_t>(r.instance));
      const SolveReport rep = run(gen.problem, cfg);
      r.status = rep.status;
      r.iterations = rep.iterations();
      for (const TraceRow& row : rep.trace) {
        r.cost += row.cost_units;
        r.max_kappa = std::max(r.max_kappa, row.kappa);
      }
      if (want_trace) {
        const std::string body = trace_csv(rep.trace);
        std::stringstream ss(body);
        std::string line;
        std::getline(ss, line);  // header
        const std::string prefix = std::to_string(r.n) + "," + std::to_string(r.instance) + "," +
                                   std::string(backend_name(r.backend)) + ",";
        while (std::getline(ss, line)) r.trace += prefix + line + "\n";
      }
      if (!rep.message.empty()) r.error = rep.message;
    } catch (const std::exception& e) {
      r.status = RunStatus::BackendFailure;
      r.error = e.what();
    }
  }

  std::string csv = "n,m,backend,median_iterations,median_cost,median_kappa\n";
  int not_optimal = 0;
  for (Index n : sizes) {
    for (BackendId b : backends) {
      std::vector<double> its, costs, kappas;
      for (const SweepRun& r : runs) {
        if (r.n != n || r.backend != b) continue;
        its.push_back(r.iterations);
        costs.push_back(r.cost);
        kappas.push_back(r.max_kappa);
      }
      csv += std::to_string(n) + "," + std::to_string((n + 1) / 2) + "," + std::string(backend_name(b)) +
             "," + fmt(median(its)) + "," + fmt(median(costs)) + "," + fmt(median(kappas)) + "\n";
    }
  }
  for (const SweepRun& r : runs) {
    if (r.status != RunStatus::Optimal) {
      ++not_optimal;
      std::cerr << "qipm: n=" << r.n << " instance=" << r.instance << " backend=" << backend_name(r.backend)
                << " finished " << run_status_name(r.status)
                << (r.error.empty() ? "" : ": " + r.error) << "\n";
    }
  }
  emit(f.output_path, csv);
  if (want_trace) {
    std::string all = std::string("n,instance,backend,") + kTraceHeader + "\n";
    for (const SweepRun& r : runs) all += r.trace;
    write_text_file(f.trace_path, all);
  }
  return not_optimal == 0 ? kExitOptimal : kExitNonConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense LP solver: homogeneous self-dual predictor-corrector with pluggable linear solvers"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string input;
  CLI::App* solve = app.add_subcommand("solve", "solve one LP given as JSON");
  solve->add_option("--input", input, "problem JSON {A, b, c, form}")->required();
  solve->add_option("--backend", solve_flags.backend, "exact, cg or qlsa");
  add_common(solve, solve_flags);

  CommonFlags sweep_flags;
  std::string sizes;
  int count = 1;
  int workers = 1;
  CLI::App* sweep = app.add_subcommand("sweep", "solve generated instances and aggregate per size");
  sweep->add_option("--sizes", sizes, "comma-separated variable counts")->required();
  sweep->add_option("--count", count, "instances per size")->check(CLI::PositiveNumber);
  sweep->add_option("--workers", workers, "parallel runs")->check(CLI::PositiveNumber);
  sweep->add_option("--backend", sweep_flags.backend, "comma-separated backends");
  add_common(sweep, sweep_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) return solve_command(input, solve_flags);
    return sweep_command(sizes, count, workers, sweep_flags);
  } catch (const InputError& e) {
    std::cerr << "qipm: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "qipm: " << e.what() << "\n";
    return kExitFailure;
  }
}
