#pragma once

/**
 * @file tasks.hpp
 * @brief Task-driven execution over an instance and the verdict report.
 *
 * A verdict is "pass" when the property named by the task holds, "fail" when
 * it certainly does not (or a precondition fails), and "undecided" when a
 * search ran out of budget.
 */

#include <string>
#include <vector>

#include "grado/io.hpp"

namespace grado {

enum class Verdict { pass, fail, undecided };
std::string to_string(Verdict v);

struct TaskResult {
  std::string task;
  Verdict verdict = Verdict::undecided;
  Json witness = Json::object();
  std::string detail;
  double ms = 0;
};

/// Known tasks in dependency order.
const std::vector<std::string>& known_tasks();

TaskResult run_task(const Instance& inst, const std::string& task, const SearchStrategy& strategy,
                    const std::vector<std::size_t>& matrix_sizes = {1, 2});

struct RunOptions {
  std::vector<std::string> tasks;  ///< empty: the instance's own list
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  bool timing = true;
  std::vector<std::size_t> matrix_sizes = {1, 2};  ///< sizes n used by matcro and equivalence
};

/// Runs the tasks in dependency order; the report has no timing when options.timing is false.
Json run_report(const Instance& inst, const RunOptions& options);

/// 0 when every verdict is decided, 2 otherwise.
int exit_code(const Json& report);

/// Re-checks the witnesses carried by a task report through the owning checkers.
bool reverify(const Instance& inst, const Json& task_report);

}  // namespace grado
