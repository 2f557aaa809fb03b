#include "qipm/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "qipm/error.hpp"

namespace qipm {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

Vector to_eigen(const nlohmann::json& arr, const char* key) {
  if (!arr.is_array()) throw InputError(std::string("solution field \"") + key + "\" must be an array");
  Vector v(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw InputError(std::string("non-numeric entry in \"") + key + "\"");
    v(static_cast<Index>(i)) = arr[i].get<double>();
  }
  return v;
}

}  // namespace

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::string out = kTraceHeader;
  out += '\n';
  for (const TraceRow& r : rows) {
    out += std::to_string(r.t);
    out += ',' + std::to_string(r.gamma);
    out += ',' + fmt(r.mu);
    out += ',' + fmt(r.tau);
    out += ',' + fmt(r.theta);
    out += ',';
    if (r.delta) out += fmt(*r.delta);
    out += ',' + fmt(r.proximity);
    out += ',' + fmt(r.kappa);
    out += ',' + fmt(r.frobenius);
    out += ',' + fmt(r.cost_units);
    out += ',' + std::to_string(r.restoration_steps);
    out += ',' + fmt(r.residual_norm);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw InputError("failed writing " + path.string());
}

std::string solution_json(const SolveReport& report, const std::string& trace_path) {
  Vector x, y, s;
  double primal = 0.0, dual = 0.0;
  if (report.solution) {
    x = report.solution->x_star;
    y = report.solution->y_star;
    s = report.solution->s_star;
    primal = report.solution->objective_primal;
    dual = report.solution->objective_dual;
  } else {
    const HsdState& v = report.final_state;
    const double tau = v.tau > 0.0 ? v.tau : 1.0;
    x = v.x / tau;
    y = v.y / tau;
    s = v.s / tau;
    primal = report.instance.problem.c.dot(x);
    dual = report.instance.problem.b.dot(y);
  }
  const Index keep = std::min<Index>(report.original_variables, x.size());
  nlohmann::ordered_json j;
  j["status"] = std::string(run_status_name(report.status));
  j["x"] = to_std(x.head(keep));
  j["y"] = to_std(y);
  j["s"] = to_std(s.head(keep));
  j["primal_objective"] = primal;
  j["dual_objective"] = dual;
  j["iterations"] = report.iterations();
  j["trace_path"] = trace_path;
  return j.dump(2) + "\n";
}

SolutionDocument parse_solution_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed solution JSON: ") + e.what());
  }
  SolutionDocument d;
  try {
    d.status = j.at("status").get<std::string>();
    d.x = to_eigen(j.at("x"), "x");
    d.y = to_eigen(j.at("y"), "y");
    d.s = to_eigen(j.at("s"), "s");
    d.primal_objective = j.at("primal_objective").get<double>();
    d.dual_objective = j.at("dual_objective").get<double>();
    d.iterations = j.at("iterations").get<int>();
    d.trace_path = j.at("trace_path").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("solution JSON: ") + e.what());
  }
  if (d.x.size() != d.s.size()) throw InputError("solution JSON: x and s differ in length");
  return d;
}

}  // namespace qipm
