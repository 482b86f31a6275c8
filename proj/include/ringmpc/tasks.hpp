#pragma once

// Task runner behind the command line: each task fills one report record.
// Failures stay inside their own record so later tasks still run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringmpc/report.hpp"
#include "ringmpc/workspace.hpp"

namespace ringmpc {

struct RunOptions {
  std::uint64_t seed = 0;
  /// Replaces the workspace codeword cap for tasks without their own budget.
  std::optional<std::uint64_t> budget;
  /// Appends wall-clock milliseconds per task (breaks byte-identical output).
  bool timing = false;
};

/// analyze, mpc, skew, matrix, verify-examples, prop.
const std::vector<std::string>& task_kinds();

/// 0 when the task passed (or only hit budgets), 1 on a failed verdict or
/// runtime error, 2 when the task references something the workspace lacks.
int run_task(const Workspace& ws, const TaskSpec& task, std::size_t index, const RunOptions& opts,
             Report& report);

/// Runs every task in order; returns the worst per-task code.
int run_tasks(const Workspace& ws, const std::vector<TaskSpec>& tasks, const RunOptions& opts,
              Report& report);

}  // namespace ringmpc
