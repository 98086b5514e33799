// ydual verify <file> | example <name> | export <name> | list
//
// Exit codes: 0 every item passed or was not asserted, 1 some item failed,
// 2 the scenario could not be read or built.

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ydual/catalog.hpp"
#include "ydual/scenario.hpp"

namespace {

struct RunFlags {
  std::string suite;
  std::optional<int> max_degree;
  std::string report = "json";
  bool no_timestamp = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--suite", f.suite, "all|axioms|lemmas|duality (default: the file's suites)")
      ->check(CLI::IsMember({"all", "axioms", "lemmas", "duality"}));
  cmd->add_option("--max-degree", f.max_degree, "bound graded verification to total degree <= N")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--report", f.report, "json|text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--no-timestamp", f.no_timestamp, "leave the timestamp out of json reports");
}

int emit(const ydual::DualityScenario& s, std::vector<ydual::Suite> suites, const RunFlags& f) {
  if (!f.suite.empty()) suites = {ydual::parse_suite(f.suite)};
  const ydual::Report r = ydual::run_suites(s, suites, f.max_degree);
  std::cout << (f.report == "text" ? r.to_text() : r.to_json(!f.no_timestamp));
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the braided smash product duality"};
  app.require_subcommand(1);

  RunFlags flags;
  std::string path;
  std::string name;
  std::optional<int> truncation;

  CLI::App* verify = app.add_subcommand("verify", "verify a scenario file");
  verify->add_option("file", path, "scenario JSON")->required();
  add_run_flags(verify, flags);

  CLI::App* example = app.add_subcommand("example", "verify a built-in example");
  example->add_option("name", name, "catalog name (see list)")->required();
  example->add_option("--truncation", truncation, "truncation N for poly_line_N6")
      ->check(CLI::NonNegativeNumber);
  add_run_flags(example, flags);

  CLI::App* exp = app.add_subcommand("export", "print a built-in example as a scenario file");
  exp->add_option("name", name, "catalog name")->required();
  exp->add_option("--truncation", truncation, "truncation N for poly_line_N6")
      ->check(CLI::NonNegativeNumber);

  app.add_subcommand("list", "list the built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("list")) {
      for (const auto& e : ydual::catalog())
        std::cout << std::left << std::setw(24) << e.name << "exit " << e.expected_exit << "  "
                  << e.summary << "\n";
      return 0;
    }
    if (app.got_subcommand("export")) {
      std::cout << ydual::serialize_scenario(ydual::build_example(name, truncation));
      return 0;
    }
    if (app.got_subcommand("example"))
      return emit(ydual::build_example(name, truncation), {ydual::Suite::all}, flags);
    const ydual::ScenarioFile file = ydual::parse_scenario(path);
    return emit(file.scenario, file.suites, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
