#pragma once

// JSON scenario files. Canonical form is what serialize_scenario writes:
// every structure map inline as a nested array of exact scalars (strings).
// On input, H^d may also be "dual-of:H" / "graded-dual-of:H" (or H the dual
// of H^d), the pairing "evaluation" / "evaluation-composed-with-braiding", and
// R "hd-with-comult". schema/scenario.schema.json has the full shape.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ydual/duality.hpp"

namespace ydual {

/// Anything wrong with a scenario file. The message names the offending field.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScenarioSyntaxError : public ScenarioError {
 public:
  ScenarioSyntaxError(std::size_t line, std::size_t column, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ScenarioFile {
  DualityScenario scenario;
  std::vector<Suite> suites{Suite::all};
};

ScenarioFile parse_scenario_text(const std::string& text);
/// Throws ScenarioError when the file cannot be read.
ScenarioFile parse_scenario(const std::string& path);

std::string serialize_scenario(const DualityScenario& s,
                               const std::vector<Suite>& suites = {Suite::all});

/// The selected suites in order; "all" anywhere means everything once.
Report run_suites(const DualityScenario& s, const std::vector<Suite>& suites,
                  std::optional<int> max_degree = std::nullopt);

}  // namespace ydual
