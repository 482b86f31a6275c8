#pragma once

// Deterministic task reports, rendered as indented text or as a
// three-column CSV (task,field,value).

#include <optional>
#include <string>
#include <vector>

#include "ringmpc/matrix.hpp"

namespace ringmpc {

struct ReportEntry {
  std::string key;
  std::string value;
  std::optional<Matrix> matrix;
};

struct TaskRecord {
  std::string label;
  /// ok, fail, error, budget-exceeded, config-error.
  std::string status = "ok";
  std::vector<ReportEntry> entries;

  void add(std::string key, std::string value);
  void add(std::string key, bool value);
  void add_matrix(std::string key, Matrix m);
};

class Report {
 public:
  TaskRecord& begin(std::string label);
  const std::vector<TaskRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }

  std::string to_text() const;
  /// Matrices take one header row ("rows=..,cols=..,ring=..") and one row
  /// per matrix row with space-separated entries.
  std::string to_csv() const;

 private:
  std::vector<TaskRecord> records_;
};

}  // namespace ringmpc
