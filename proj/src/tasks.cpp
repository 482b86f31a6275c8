#include "ringmpc/tasks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "ringmpc/errors.hpp"
#include "ringmpc/examples.hpp"
#include "ringmpc/properties.hpp"

namespace ringmpc {

namespace {

int severity(const std::string& status) {
  if (status == "config-error") return 4;
  if (status == "error") return 3;
  if (status == "fail") return 2;
  if (status == "budget-exceeded") return 1;
  return 0;
}

void raise(TaskRecord& rec, const std::string& status) {
  if (severity(status) > severity(rec.status)) rec.status = status;
}

void verdict(TaskRecord& rec, const std::string& key, bool ok) {
  rec.add(key, ok);
  if (!ok) raise(rec, "fail");
}

// Runs one report field; budget overruns and unmet hypotheses are recorded
// in place instead of aborting the task.
template <class F>
bool guarded(TaskRecord& rec, const std::string& key, F&& f) {
  try {
    f();
    return true;
  } catch (const BudgetExceeded& e) {
    rec.add(key, std::string("budget-exceeded: ") + e.what());
    raise(rec, "budget-exceeded");
  } catch (const PreconditionError& e) {
    rec.add(key, std::string("n/a: ") + e.what());
  } catch (const UndefinedDistance& e) {
    rec.add(key, std::string("n/a: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    rec.add(key, std::string("error: ") + e.what());
    raise(rec, "error");
  }
  return false;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(',', start), s.size());
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

struct Ctx {
  const Workspace& ws;
  const TaskSpec& task;
  Limits limits;
  std::uint64_t seed;
  std::set<std::string> aspects;

  std::optional<std::string> arg(const std::string& k) const {
    auto it = task.args.find(k);
    if (it == task.args.end()) return std::nullopt;
    return it->second;
  }
  bool want(const std::string& a) const { return aspects.empty() || aspects.count(a); }
};

void check_keys(const Ctx& c, std::initializer_list<const char*> keys, std::initializer_list<const char*> aspects) {
  for (const auto& [k, v] : c.task.args)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) && k != "aspects" &&
        k != "seed")
      throw ParseError("task '" + c.task.kind + "': unknown option '" + k + "'");
  for (const auto& a : c.aspects)
    if (std::none_of(aspects.begin(), aspects.end(), [&](const char* x) { return a == x; }))
      throw ParseError("task '" + c.task.kind + "': unknown aspect '" + a + "'");
}

std::size_t parse_count(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const unsigned long long n = std::stoull(v, &pos);
    if (pos != v.size() || v.front() == '-') throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::logic_error&) {
    throw ParseError("option '" + key + "' expects a non-negative integer, got '" + v + "'");
  }
}

std::string kind_name(ResolvedCode::Kind k) {
  switch (k) {
    case ResolvedCode::Kind::Generators: return "generators";
    case ResolvedCode::Kind::Principal: return "principal";
    case ResolvedCode::Kind::Mpc: return "matrix-product";
    case ResolvedCode::Kind::Dual: return "dual";
  }
  return "?";
}

std::string join_words(const Ring& r, const std::vector<Word>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "; " : "") + format_word(r, ws[i]);
  return s;
}

void duality_fields(TaskRecord& rec, const std::string& p, const LinearCode& code, const Limits& lim) {
  guarded(rec, p + "duality", [&] {
    const auto d = code.duality(lim);
    rec.add(p + "duality", to_string(d.cls));
    rec.add(p + "self_orthogonal", d.self_orthogonal);
    rec.add(p + "self_dual", d.self_dual);
    rec.add(p + "lcd", d.lcd);
  });
}

void analyze_one(const Ctx& c, const std::string& name, const std::string& p, TaskRecord& rec) {
  const ResolvedCode& rc = c.ws.code(name);
  const LinearCode& code = rc.code;
  rec.add(p + "definition", kind_name(rc.kind));
  rec.add(p + "ring", code.ring().name());
  rec.add(p + "length", std::to_string(code.length()));
  if (c.want("generators")) rec.add_matrix(p + "generators", code.generators());
  if (c.want("size")) rec.add(p + "cardinality", code.cardinality().str());
  if (c.want("free")) {
    const auto f = code.freeness();
    rec.add(p + "free", f.free);
    if (f.free) rec.add(p + "rank", std::to_string(f.rank));
  }
  if (c.want("distance"))
    guarded(rec, p + "distance", [&] { rec.add(p + "distance", std::to_string(code.min_distance(c.limits))); });
  if (c.want("words"))
    guarded(rec, p + "min_words", [&] {
      const auto words = code.minimum_weight_words(c.limits);
      rec.add(p + "min_word_count", std::to_string(words.size()));
      rec.add(p + "min_words", join_words(code.ring(), words));
    });
  if (c.want("duality")) duality_fields(rec, p, code, c.limits);
}

void task_analyze(const Ctx& c, TaskRecord& rec) {
  check_keys(c, {"code"}, {"generators", "size", "free", "distance", "words", "duality"});
  if (auto name = c.arg("code")) {
    for (const auto& n : split(*name)) c.ws.code(n);
    const auto names = split(*name);
    for (const auto& n : names) analyze_one(c, n, names.size() > 1 ? n + "." : "", rec);
    return;
  }
  for (const auto& n : c.ws.code_names()) analyze_one(c, n, n + ".", rec);
}

void task_mpc(const Ctx& c, TaskRecord& rec) {
  check_keys(c, {"code", "codes", "matrix"}, {"size", "bound", "distance", "free", "duality", "witness", "dual"});
  std::vector<LinearCode> inputs;
  std::optional<Matrix> a;
  if (auto name = c.arg("code")) {
    const ResolvedCode& rc = c.ws.code(*name);
    if (!rc.mpc) throw ParseError("code '" + *name + "' is not a matrix-product code");
    inputs = rc.mpc->inputs();
    a = rc.mpc->matrix();
    rec.add("inputs", [&] {
      std::string s;
      for (std::size_t i = 0; i < rc.refs.size(); ++i) s += (i ? "," : "") + rc.refs[i];
      return s;
    }());
    rec.add("matrix", *rc.matrix_name);
  } else {
    auto codes = c.arg("codes");
    auto m = c.arg("matrix");
    if (!codes || !m) throw ParseError("task 'mpc' needs code=NAME or codes=A,B,.. matrix=NAME");
    for (const auto& n : split(*codes)) inputs.push_back(c.ws.code(n).code);
    a = c.ws.matrix(*m);
    rec.add("inputs", *codes);
    rec.add("matrix", *m);
  }
  std::optional<MatrixProductCode> mpc;
  if (!guarded(rec, "construction", [&] { mpc = build_mpc(inputs, *a); })) return;
  const LinearCode& code = mpc->realized();
  const bool full = is_full_rank(*a);
  rec.add("s", std::to_string(a->rows()));
  rec.add("l", std::to_string(a->cols()));
  rec.add("n", std::to_string(mpc->input_length()));
  rec.add("length", std::to_string(code.length()));
  rec.add("full_rank", full);

  if (c.want("size")) {
    Count product = 1;
    for (const auto& in : inputs) product *= in.cardinality();
    rec.add("cardinality", code.cardinality().str());
    rec.add("input_product", product.str());
    if (full) verdict(rec, "cardinality_matches", code.cardinality() == product);
  }
  std::optional<std::size_t> bound, dist;
  if (c.want("bound"))
    guarded(rec, "bound", [&] {
      bound = distance_lower_bound(inputs, *a, c.limits);
      rec.add("bound", std::to_string(*bound));
    });
  if (c.want("distance"))
    guarded(rec, "distance", [&] {
      dist = code.min_distance(c.limits);
      rec.add("distance", std::to_string(*dist));
    });
  if (bound && dist) verdict(rec, "bound_holds", *dist >= *bound);
  if (c.want("free")) {
    const auto f = code.freeness();
    rec.add("free", f.free);
    if (f.free) rec.add("rank", std::to_string(f.rank));
    bool inputs_free = true;
    std::size_t sum = 0;
    for (const auto& in : inputs) {
      const auto fi = in.freeness();
      inputs_free = inputs_free && fi.free;
      sum += fi.rank;
    }
    rec.add("inputs_free", inputs_free);
    if (inputs_free && full) verdict(rec, "rank_matches", f.free && f.rank == sum);
  }
  if (c.want("duality")) duality_fields(rec, "", code, c.limits);
  if (c.want("witness"))
    guarded(rec, "witness", [&] {
      const auto w = sharpness_witness(inputs, *a, c.limits);
      rec.add("witness", to_string(w.status));
      if (!w.detail.empty()) rec.add("witness_detail", w.detail);
      if (w.status == SharpnessStatus::Witness && bound && dist) verdict(rec, "witness_equality", *bound == *dist);
    });
  if (c.want("dual")) {
    guarded(rec, "dual", [&] {
      const auto d = mpc_dual(inputs, *a, c.limits);
      rec.add_matrix("dual_generators", d.realized().generators());
      verdict(rec, "dual_matches", code_equals(d.realized(), code.dual()));
    });
    if (a->is_square()) {
      if (auto units = is_quasi_orthogonal(*a)) {
        rec.add("quasi_orthogonal", format_word(a->ring(), *units));
        guarded(rec, "characterization", [&] {
          verdict(rec, "characterization", characterization_check(inputs, *a, c.limits).all_hold());
        });
      } else {
        rec.add("quasi_orthogonal", false);
      }
    }
  }
}

void task_skew(const Ctx& c, TaskRecord& rec) {
  check_keys(c, {"code", "g", "f"}, {"generator", "h", "parity", "companion", "criteria"});
  std::optional<PrincipalSkewCode> pc;
  if (auto name = c.arg("code")) {
    const ResolvedCode& rc = c.ws.code(*name);
    if (!rc.principal) throw ParseError("code '" + *name + "' is not a principal skew code");
    pc = *rc.principal;
  } else {
    auto g = c.arg("g");
    auto f = c.arg("f");
    if (!g || !f) throw ParseError("task 'skew' needs code=NAME or g=NAME f=NAME");
    const SkewPoly& gp = c.ws.poly(*g);
    const SkewPoly& fp = c.ws.poly(*f);
    if (!guarded(rec, "construction", [&] { pc = principal_code(gp, fp); })) return;
  }
  const auto& ctx = pc->g.context();
  rec.add("context", ctx->name());
  rec.add("ring", ctx->ring().name());
  rec.add("sigma_invertible", ctx->sigma_invertible());
  rec.add("delta_zero", ctx->delta_is_zero());
  rec.add("g", pc->g.to_string());
  rec.add("f", pc->f.to_string());
  rec.add("n", std::to_string(pc->n));
  rec.add("k", std::to_string(pc->k));
  if (c.want("generator")) rec.add_matrix("generator", pc->generator);
  if (c.want("h")) rec.add("h", pc->h ? pc->h->to_string() : std::string("none"));
  if (c.want("parity")) {
    if (pc->parity) {
      rec.add_matrix("parity", *pc->parity);
      verdict(rec, "generator_parity_orthogonal", (pc->generator * pc->parity->transpose()).is_zero());
    } else {
      rec.add("parity", std::string("n/a: needs invertible sigma and f = g h"));
    }
  }
  if (c.want("companion")) rec.add_matrix("companion", companion_matrix(pc->f));
  if (c.want("criteria"))
    guarded(rec, "criteria", [&] {
      const auto cr = constacyclic_selfdual_criteria(pc->g, pc->f, c.limits);
      const Ring& r = ctx->ring();
      rec.add("a", r.format(cr.a));
      if (cr.h) rec.add("criteria_h", cr.h->to_string());
      rec.add("cond1", cr.cond1);
      for (std::size_t l = 0; l < cr.cond2_per_l.size(); ++l)
        rec.add("cond2[l=" + std::to_string(l) + "]",
                std::string(cr.cond2_per_l[l] ? "yes" : "no") + " (sum " + r.format(cr.cond2_sums[l]) + ")");
      rec.add("self_dual", cr.direct);
    });
}

void task_matrix(const Ctx& c, TaskRecord& rec) {
  check_keys(c, {"matrix"}, {"entries", "inverse", "rows"});
  auto name = c.arg("matrix");
  if (!name) throw ParseError("task 'matrix' needs matrix=NAME");
  const Matrix& a = c.ws.matrix(*name);
  rec.add("ring", a.ring().name());
  rec.add("shape", std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (c.want("entries")) rec.add_matrix("entries", a);
  rec.add("full_rank", is_full_rank(a));
  if (a.is_square() && c.want("inverse"))
    guarded(rec, "determinant", [&] {
      rec.add("determinant", a.ring().format(determinant(a, c.limits)));
      auto inv = inverse(a, c.limits);
      rec.add("nonsingular", inv.has_value());
      if (inv) rec.add_matrix("inverse", *inv);
      auto units = is_quasi_orthogonal(a);
      rec.add("quasi_orthogonal", units ? format_word(a.ring(), *units) : std::string("no"));
    });
  if (c.want("rows"))
    guarded(rec, "row_distances", [&] {
      const auto fam = row_codes(a, c.limits);
      std::string s;
      for (std::size_t i = 0; i < fam.distances.size(); ++i) s += (i ? "," : "") + std::to_string(fam.distances[i]);
      rec.add("row_distances", s);
    });
}

void task_verify(const Ctx& c, TaskRecord& rec) {
  check_keys(c, {"only"}, {});
  const std::string only = c.arg("only").value_or("");
  std::size_t golden = 0, passed = 0;
  for (const auto& chk : examples::verify_examples(c.limits)) {
    if (chk.id.rfind(only, 0) != 0) continue;
    std::string v;
    if (!chk.golden) {
      v = "report";
    } else {
      ++golden;
      if (chk.passed) ++passed;
      v = chk.passed ? "pass" : "FAIL";
      if (!chk.passed) raise(rec, "fail");
    }
    if (!chk.detail.empty() && (!chk.passed || !chk.golden)) v += ": " + chk.detail;
    rec.add(chk.id, v);
  }
  rec.add("golden_passed", std::to_string(passed) + "/" + std::to_string(golden));
}

void task_prop(const Ctx& c, TaskRecord& rec) {
  check_keys(c, {"suite", "count"}, {});
  std::vector<std::string> suites;
  const std::string sel = c.arg("suite").value_or("all");
  if (sel == "all") {
    suites = properties::suite_names();
  } else {
    suites = split(sel);
    for (const auto& s : suites) {
      const auto& known = properties::suite_names();
      if (std::find(known.begin(), known.end(), s) == known.end())
        throw ParseError("unknown property suite '" + s + "'");
    }
  }
  std::optional<std::size_t> count;
  if (auto n = c.arg("count")) count = parse_count("count", *n);
  rec.add("seed", std::to_string(c.seed));
  for (const auto& s : suites) {
    const auto r = properties::run_suite(s, c.seed, count.value_or(properties::default_count(s)), c.limits);
    rec.add(s + ".cases", std::to_string(r.cases));
    rec.add(s + ".passed", std::to_string(r.passed));
    rec.add(s + ".skipped", std::to_string(r.skipped));
    for (const auto& [k, v] : r.tallies) rec.add(s + "." + k, std::to_string(v));
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
      rec.add(s + ".counterexample[" + std::to_string(i) + "]", r.counterexamples[i]);
    if (!r.ok()) raise(rec, "fail");
  }
}

using TaskFn = std::function<void(const Ctx&, TaskRecord&)>;

const std::vector<std::pair<std::string, TaskFn>>& registry() {
  static const std::vector<std::pair<std::string, TaskFn>> r = {
      {"analyze", task_analyze}, {"mpc", task_mpc},   {"skew", task_skew},
      {"matrix", task_matrix},   {"verify-examples", task_verify}, {"prop", task_prop}};
  return r;
}

std::string label_of(const TaskSpec& t, std::size_t index) {
  std::string s = "#" + std::to_string(index + 1) + " " + t.kind;
  for (const auto& [k, v] : t.args) s += " " + (k == "aspects" ? v : k + "=" + v);
  return s;
}

}  // namespace

const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> k = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return k;
}

int run_task(const Workspace& ws, const TaskSpec& task, std::size_t index, const RunOptions& opts,
             Report& report) {
  TaskRecord& rec = report.begin(label_of(task, index));
  const auto start = std::chrono::steady_clock::now();
  try {
    Limits lim = ws.limits();
    if (opts.budget) lim.codewords = *opts.budget;
    if (task.limits) lim = *task.limits;
    std::uint64_t seed = opts.seed;
    if (auto it = task.args.find("seed"); it != task.args.end()) seed = parse_count("seed", it->second);
    std::set<std::string> aspects;
    if (auto it = task.args.find("aspects"); it != task.args.end())
      for (auto& a : split(it->second)) aspects.insert(a);
    const Ctx c{ws, task, lim, seed, std::move(aspects)};
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == task.kind; });
    if (it == registry().end()) throw ParseError("unknown task kind '" + task.kind + "'");
    it->second(c, rec);
  } catch (const ParseError& e) {
    rec.add("error", e.what());
    raise(rec, "config-error");
  } catch (const BudgetExceeded& e) {
    rec.add("error", std::string("budget-exceeded: ") + e.what());
    raise(rec, "budget-exceeded");
  } catch (const std::exception& e) {
    rec.add("error", e.what());
    raise(rec, "error");
  }
  if (opts.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    rec.add("elapsed_ms", std::to_string(ms.count()));
  }
  switch (severity(rec.status)) {
    case 4: return 2;
    case 3:
    case 2: return 1;
    default: return 0;
  }
}

int run_tasks(const Workspace& ws, const std::vector<TaskSpec>& tasks, const RunOptions& opts, Report& report) {
  int worst = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) worst = std::max(worst, run_task(ws, tasks[i], i, opts, report));
  return worst;
}

}  // namespace ringmpc
