#include "qipm/lp_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qipm/error.hpp"

namespace qipm {
namespace {

using nlohmann::json;

Vector to_vector(const json& j, const char* name) {
  if (!j.is_array()) throw InputError(std::string("\"") + name + "\" must be an array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw InputError(std::string("\"") + name + "\" contains a non-numeric entry");
    }
    v(static_cast<Index>(i)) = j[i].get<double>();
  }
  return v;
}

}  // namespace

LpProblem parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed problem JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("problem JSON must be an object");
  for (const char* key : {"A", "b", "c"}) {
    if (!doc.contains(key)) throw InputError(std::string("problem JSON lacks \"") + key + "\"");
  }

  const json& rows = doc["A"];
  if (!rows.is_array() || rows.empty()) throw InputError("\"A\" must be a non-empty array of rows");
  const std::size_t ncols = rows[0].is_array() ? rows[0].size() : 0;
  if (ncols == 0) throw InputError("\"A\" rows must be non-empty arrays");

  LpProblem p;
  p.A.resize(static_cast<Index>(rows.size()), static_cast<Index>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != ncols) {
      throw InputError("\"A\" is not rectangular (row " + std::to_string(i) + ")");
    }
    p.A.row(static_cast<Index>(i)) = to_vector(rows[i], "A").transpose();
  }
  p.b = to_vector(doc["b"], "b");
  p.c = to_vector(doc["c"], "c");

  const std::string form = doc.value("form", std::string("equality"));
  if (form == "equality") {
    p.form = ProblemForm::StandardEquality;
  } else if (form == "inequality") {
    p.form = ProblemForm::Inequality;
  } else {
    throw InputError("unknown form \"" + form + "\"");
  }
  p.validate();
  return p;
}

LpProblem load_problem_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_json(ss.str());
}

std::string problem_to_json(const LpProblem& p) {
  json doc;
  json rows = json::array();
  for (Index i = 0; i < p.A.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < p.A.cols(); ++j) row.push_back(p.A(i, j));
    rows.push_back(std::move(row));
  }
  doc["A"] = std::move(rows);
  doc["b"] = std::vector<double>(p.b.data(), p.b.data() + p.b.size());
  doc["c"] = std::vector<double>(p.c.data(), p.c.data() + p.c.size());
  doc["form"] = p.form == ProblemForm::Inequality ? "inequality" : "equality";
  return doc.dump(2);
}

}  // namespace qipm
