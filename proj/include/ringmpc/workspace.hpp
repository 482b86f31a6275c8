#pragma once

// JSON workspace: named rings, constants, maps, skew contexts, polynomials,
// matrices, codes and an ordered task list.
//
// {
//   "budgets":   {"codewords": 1000000, "kernel_ops": 100000000},
//   "rings":     {"R": {"kind": "product", "factors": [{"kind": "integers_mod", "m": 3}, ...]}},
//   "constants": {"alpha": {"ring": "R", "value": "(2,2)"}},
//   "maps":      {"swap": {"ring": "R", "kind": "permute", "perm": [1, 0]}},
//   "contexts":  {"S": {"sigma": "swap", "delta": "d"}},
//   "polys":     {"g": {"context": "S", "text": "X^2 + X + alpha"}},
//   "matrices":  {"A": {"ring": "R", "rows": [["(1,0)", "(0,1)"], ["(0,2)", "(1,0)"]]}},
//   "codes":     {"C":  {"principal": {"g": "g", "f": "f"}},
//                 "M":  {"mpc": {"codes": ["C", "C"], "matrix": "A"}},
//                 "D":  {"dual_of": "M"},
//                 "C1": {"ring": "Z4", "generators": [["1", "2", "0"]]}},
//   "tasks":     [{"task": "analyze", "code": "C1"}, {"task": "mpc", "code": "M"}]
// }

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringmpc/limits.hpp"
#include "ringmpc/matrix_product.hpp"
#include "ringmpc/ring_map.hpp"
#include "ringmpc/skew_poly.hpp"

namespace ringmpc {

/// A declared code after resolution.
struct ResolvedCode {
  enum class Kind { Generators, Principal, Mpc, Dual };
  Kind kind;
  LinearCode code;
  std::optional<PrincipalSkewCode> principal;
  std::optional<MatrixProductCode> mpc;
  /// Code names the definition refers to (inputs of an MPC, source of a dual).
  std::vector<std::string> refs;
  std::optional<std::string> matrix_name;
};

/// One task request. Scalar options are kept as strings; string lists are
/// joined with commas.
struct TaskSpec {
  std::string kind;
  std::map<std::string, std::string> args;
  std::optional<Limits> limits;
};

class Workspace {
 public:
  /// Throws ParseError with a field path for malformed or dangling input.
  static Workspace from_json_text(const std::string& text, const std::string& origin = "config");
  static Workspace load(const std::filesystem::path& path);
  static Workspace empty();

  const Limits& limits() const { return limits_; }
  void set_limits(const Limits& l) { limits_ = l; }

  const Ring& ring(const std::string& name) const;
  const RingMap& map(const std::string& name) const;
  const SkewContextPtr& context(const std::string& name) const;
  const SkewPoly& poly(const std::string& name) const;
  const Matrix& matrix(const std::string& name) const;
  const ResolvedCode& code(const std::string& name) const;

  const std::vector<std::string>& code_names() const { return code_order_; }
  const std::vector<std::string>& matrix_names() const { return matrix_order_; }
  const std::vector<TaskSpec>& tasks() const { return tasks_; }

  /// Constant lookup restricted to one ring, for element parsing.
  std::optional<Elem> constant(const Ring& r, std::string_view name) const;

 private:
  struct Impl;
  Limits limits_;
  std::map<std::string, Ring> rings_;
  std::map<std::string, std::pair<Ring, Elem>> constants_;
  std::map<std::string, RingMap> maps_;
  std::map<std::string, SkewContextPtr> contexts_;
  std::map<std::string, SkewPoly> polys_;
  std::map<std::string, Matrix> matrices_;
  std::map<std::string, ResolvedCode> codes_;
  std::vector<std::string> code_order_;
  std::vector<std::string> matrix_order_;
  std::vector<TaskSpec> tasks_;
};

}  // namespace ringmpc
