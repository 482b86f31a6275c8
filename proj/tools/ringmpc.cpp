// Command-line front end: loads a JSON workspace and runs analysis tasks.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringmpc/errors.hpp"
#include "ringmpc/tasks.hpp"
#include "ringmpc/workspace.hpp"

namespace {

// key=value selectors become task options; bare words select aspects.
ringmpc::TaskSpec task_from_selectors(const std::string& kind, const std::vector<std::string>& selectors) {
  ringmpc::TaskSpec t;
  t.kind = kind;
  std::string aspects;
  for (const auto& s : selectors) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      aspects += (aspects.empty() ? "" : ",") + s;
    } else if (eq == 0) {
      throw ringmpc::ParseError("malformed selector '" + s + "'");
    } else {
      t.args[s.substr(0, eq)] = s.substr(eq + 1);
    }
  }
  if (!aspects.empty()) t.args["aspects"] = aspects;
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-product codes over finite rings and skew polynomial codes"};
  app.set_help_all_flag("--help-all");

  std::optional<std::string> config;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> out;
  std::string format = "text";
  bool timing = false;
  app.add_option("--config", config, "JSON workspace file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Seed for randomized property suites");
  app.add_option("--budget", budget, "Maximum number of codewords any enumeration may visit");
  app.add_option("--out", out, "Also write the report to this file");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "csv"}));
  app.add_flag("--timing", timing, "Append per-task wall-clock time");

  std::vector<std::string> selectors;
  app.add_subcommand("run", "Run the task list of the config file");
  const std::vector<std::pair<std::string, std::string>> kinds = {
      {"analyze", "Parameters of declared codes (code=NAME; generators size free distance words duality)"},
      {"mpc", "Matrix-product code report (code=NAME or codes=A,B matrix=M; bound distance free duality witness dual)"},
      {"skew", "Principal skew code (code=NAME or g=NAME f=NAME; generator h parity companion criteria)"},
      {"matrix", "Matrix properties (matrix=NAME; entries inverse rows)"},
      {"verify-examples", "Built-in worked examples (only=PREFIX)"},
      {"prop", "Randomized property suites (suite=NAME|all count=N)"}};
  for (const auto& [name, desc] : kinds)
    app.add_subcommand(name, desc)->add_option("selectors", selectors, "key=value options and aspect words");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ringmpc::Report report;
  int status = 0;
  try {
    ringmpc::Workspace ws = config ? ringmpc::Workspace::load(*config) : ringmpc::Workspace::empty();
    ringmpc::RunOptions opts{seed, budget, timing};
    std::vector<ringmpc::TaskSpec> tasks;
    auto subs = app.get_subcommands();
    if (subs.empty() || subs.front()->get_name() == "run")
      tasks = ws.tasks();
    else
      tasks.push_back(task_from_selectors(subs.front()->get_name(), selectors));
    status = ringmpc::run_tasks(ws, tasks, opts, report);
  } catch (const ringmpc::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = format == "csv" ? report.to_csv() : report.to_text();
  std::cout << text;
  if (out) {
    std::ofstream f(*out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << *out << "\n";
      return 2;
    }
    f << text;
  }
  return status;
}
