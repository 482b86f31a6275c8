#include "ringmpc/report.hpp"

#include <sstream>

namespace ringmpc {

namespace {

std::string matrix_row(const Matrix& m, std::size_t r) {
  std::string s;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c) s += ' ';
    s += m.ring().format(m(r, c));
  }
  return s;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void TaskRecord::add(std::string key, std::string value) {
  entries.push_back({std::move(key), std::move(value), std::nullopt});
}

void TaskRecord::add(std::string key, bool value) { add(std::move(key), std::string(value ? "yes" : "no")); }

void TaskRecord::add_matrix(std::string key, Matrix m) {
  std::string shape = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " over " + m.ring().name();
  entries.push_back({std::move(key), std::move(shape), std::move(m)});
}

TaskRecord& Report::begin(std::string label) {
  records_.push_back(TaskRecord{std::move(label), "ok", {}});
  return records_.back();
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& rec : records_) {
    os << "== " << rec.label << " [" << rec.status << "]\n";
    for (const auto& e : rec.entries) {
      os << "  " << e.key << ": " << e.value << "\n";
      if (e.matrix)
        for (std::size_t r = 0; r < e.matrix->rows(); ++r) os << "    [" << matrix_row(*e.matrix, r) << "]\n";
    }
  }
  return os.str();
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "task,field,value\n";
  for (const auto& rec : records_) {
    const std::string t = csv_field(rec.label);
    os << t << ",status," << csv_field(rec.status) << "\n";
    for (const auto& e : rec.entries) {
      if (!e.matrix) {
        os << t << "," << csv_field(e.key) << "," << csv_field(e.value) << "\n";
        continue;
      }
      const Matrix& m = *e.matrix;
      os << t << "," << csv_field(e.key) << ","
         << csv_field("rows=" + std::to_string(m.rows()) + ",cols=" + std::to_string(m.cols()) +
                      ",ring=" + m.ring().name())
         << "\n";
      for (std::size_t r = 0; r < m.rows(); ++r)
        os << t << "," << csv_field(e.key + "[" + std::to_string(r) + "]") << "," << csv_field(matrix_row(m, r))
           << "\n";
    }
  }
  return os.str();
}

}  // namespace ringmpc
