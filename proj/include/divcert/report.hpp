#pragma once

// Task orchestration and JSON reports for the command-line tool.

#include <optional>
#include <string>

#include "json.hpp"

#include "divcert/division.hpp"

namespace divcert {

using Json = nlohmann::ordered_json;

struct TaskSpec {
  std::string task;  // membership, minimal-degree, regularity, resolution, hypotheses, bounds, theorem
  std::string input_path;
  std::optional<int> degree;
  std::optional<int> cap;
  std::optional<std::string> theorem;
  std::string order = "grevlex";
  std::optional<std::string> c_infinity;  // integer or "-inf"
  std::optional<int> mu_0;
  bool assert_smooth = false;
  bool assert_pure = false;
};

/// Exit codes: 0 success or feasible, 2 infeasible or refuted, 1 error.
struct RunResult {
  Json report;
  int exit_code = 0;
};

bool is_known_task(const std::string& task);
/// Throws InvalidParameter when an option does not apply to the task.
void validate(const TaskSpec& spec);

RunResult run(const TaskSpec& spec);
RunResult run_text(const TaskSpec& spec, const std::string& text);

/// The report without its "timings" field, serialized.
std::string canonical_body(const Json& report);

Json to_json(const Polynomial& p);
Json to_json(const Certificate& c);
Json to_json(const HypothesisReport& r);
Json to_json(const BoundReport& b);
Json to_json(const BettiTable& t);
Json to_json(const ProblemInstance& inst);

/// Rebuilds a certificate from its JSON form over the instance ring.
Certificate certificate_from_json(const Json& j, const ProblemInstance& inst);

}  // namespace divcert
