#pragma once

#include <filesystem>
#include <string>

#include "qipm/lp_model.hpp"

namespace qipm {

/// Parses `{ "A": [[...]], "b": [...], "c": [...], "form": "equality"|"inequality" }`.
/// "form" defaults to "equality". Throws InputError on malformed documents,
/// ragged rows, dimension mismatches and non-finite values.
LpProblem parse_problem_json(const std::string& text);
LpProblem load_problem_json(const std::filesystem::path& path);
std::string problem_to_json(const LpProblem& problem);

}  // namespace qipm
