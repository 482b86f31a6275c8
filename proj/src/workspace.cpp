#include "ringmpc/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ringmpc/errors.hpp"

namespace ringmpc {

using Json = nlohmann::ordered_json;

struct Workspace::Impl {
  Workspace& ws;
  const Json& root;
  std::string origin;
  std::set<std::string> visiting;

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw ParseError(origin + ": " + path + ": " + msg);
  }

  const Json& field(const Json& obj, const char* key, const std::string& path) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  std::string str(const Json& j, const std::string& path) const {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    fail(path, "expected a string");
  }

  std::uint64_t uint(const Json& j, const std::string& path) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
      fail(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
  }

  template <class T>
  const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* what,
                  const std::string& path) const {
    auto it = m.find(name);
    if (it == m.end()) fail(path, std::string("unknown ") + what + " '" + name + "'");
    return it->second;
  }

  Elem element(const Ring& r, const Json& j, const std::string& path) const {
    const std::string text = str(j, path);
    try {
      return r.parse(text, [&](std::string_view n) { return ws.constant(r, n); });
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }

  Word word(const Ring& r, const Json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected a list of elements");
    Word w;
    for (std::size_t i = 0; i < j.size(); ++i)
      w.push_back(element(r, j[i], path + "[" + std::to_string(i) + "]"));
    return w;
  }

  Matrix matrix_rows(const Ring& r, const Json& j, const std::string& path,
                     std::optional<std::size_t> cols = std::nullopt) const {
    if (!j.is_array()) fail(path, "expected a list of rows");
    std::vector<Word> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
      rows.push_back(word(r, j[i], path + "[" + std::to_string(i) + "]"));
      if (rows.back().size() != rows.front().size()) fail(path, "rows differ in length");
    }
    const std::size_t c = cols ? *cols : (rows.empty() ? 0 : rows[0].size());
    if (!rows.empty() && rows[0].size() != c) fail(path, "row length differs from declared length");
    return Matrix::from_rows(r, c, rows);
  }

  Ring ring_spec(const Json& j, const std::string& path) const {
    if (j.is_string()) return lookup(ws.rings_, j.get<std::string>(), "ring", path);
    const std::string kind = str(field(j, "kind", path), path + ".kind");
    try {
      if (kind == "integers_mod")
        return Ring::integers_mod(static_cast<std::uint32_t>(uint(field(j, "m", path), path + ".m")));
      if (kind == "galois_field") {
        std::vector<std::uint32_t> mod;
        if (auto it = j.find("modulus"); it != j.end())
          for (const auto& c : *it) mod.push_back(static_cast<std::uint32_t>(uint(c, path + ".modulus")));
        return Ring::galois_field(static_cast<std::uint32_t>(uint(field(j, "p", path), path + ".p")),
                                  static_cast<unsigned>(uint(field(j, "k", path), path + ".k")), mod);
      }
      if (kind == "product") {
        const Json& fs = field(j, "factors", path);
        std::vector<Ring> factors;
        for (std::size_t i = 0; i < fs.size(); ++i)
          factors.push_back(ring_spec(fs[i], path + ".factors[" + std::to_string(i) + "]"));
        return Ring::product(std::move(factors));
      }
    } catch (const PreconditionError& e) {
      fail(path, e.what());
    }
    fail(path + ".kind", "unknown ring kind '" + kind + "'");
  }

  RingMap map_spec(const Json& j, const std::string& path) const {
    const std::string kind = str(field(j, "kind", path), path + ".kind");
    auto sigma = [&]() -> const RingMap& {
      return lookup(ws.maps_, str(field(j, "sigma", path), path + ".sigma"), "map", path + ".sigma");
    };
    auto ring = [&]() -> const Ring& {
      return lookup(ws.rings_, str(field(j, "ring", path), path + ".ring"), "ring", path + ".ring");
    };
    try {
      if (kind == "identity") return RingMap::identity(ring());
      if (kind == "frobenius") {
        unsigned power = 1;
        if (auto it = j.find("power"); it != j.end()) power = static_cast<unsigned>(uint(*it, path + ".power"));
        return RingMap::frobenius(ring(), power);
      }
      if (kind == "permute") {
        std::vector<std::size_t> perm;
        for (const auto& p : field(j, "perm", path)) perm.push_back(uint(p, path + ".perm"));
        return RingMap::permute_components(ring(), perm);
      }
      if (kind == "table")
        return RingMap::endomorphism_from_table(ring(), word(ring(), field(j, "values", path), path + ".values"));
      if (kind == "zero_derivation") return RingMap::zero_derivation(sigma());
      if (kind == "inner_derivation") {
        const RingMap& s = sigma();
        return RingMap::inner_derivation(s, element(s.ring(), field(j, "beta", path), path + ".beta"));
      }
      if (kind == "derivation_table") {
        const RingMap& s = sigma();
        return RingMap::derivation_from_table(s, word(s.ring(), field(j, "values", path), path + ".values"));
      }
    } catch (const AxiomViolation& e) {
      fail(path, e.what());
    } catch (const PreconditionError& e) {
      fail(path, e.what());
    } catch (const BudgetExceeded& e) {
      fail(path, e.what());
    }
    fail(path + ".kind", "unknown map kind '" + kind + "'");
  }

  const ResolvedCode& resolve_code(const std::string& name, const std::string& path) {
    if (auto it = ws.codes_.find(name); it != ws.codes_.end()) return it->second;
    const Json& codes = root.contains("codes") ? root["codes"] : Json::object();
    auto it = codes.find(name);
    if (it == codes.end()) fail(path, "unknown code '" + name + "'");
    if (visiting.count(name)) fail(path, "code definitions form a cycle through '" + name + "'");
    visiting.insert(name);
    const Json& j = *it;
    const std::string p = "codes." + name;
    std::optional<ResolvedCode> out;
    try {
      if (j.contains("generators")) {
        const Ring& r = lookup(ws.rings_, str(field(j, "ring", p), p + ".ring"), "ring", p + ".ring");
        std::optional<std::size_t> len;
        if (auto l = j.find("length"); l != j.end()) len = uint(*l, p + ".length");
        Matrix g = matrix_rows(r, j["generators"], p + ".generators", len);
        if (g.rows() == 0 && !len) fail(p, "an empty generator list needs an explicit length");
        out = ResolvedCode{ResolvedCode::Kind::Generators, LinearCode(std::move(g)), {}, {}, {}, {}};
      } else if (j.contains("principal")) {
        const Json& pj = j["principal"];
        const SkewPoly& g = lookup(ws.polys_, str(field(pj, "g", p + ".principal"), p), "poly", p + ".principal.g");
        const SkewPoly& f = lookup(ws.polys_, str(field(pj, "f", p + ".principal"), p), "poly", p + ".principal.f");
        auto pc = principal_code(g, f);
        LinearCode c = pc.realized;
        out = ResolvedCode{ResolvedCode::Kind::Principal, std::move(c), std::move(pc), {}, {}, {}};
      } else if (j.contains("mpc")) {
        const Json& mj = j["mpc"];
        std::vector<std::string> refs;
        std::vector<LinearCode> inputs;
        const Json& cs = field(mj, "codes", p + ".mpc");
        for (std::size_t i = 0; i < cs.size(); ++i) {
          refs.push_back(str(cs[i], p + ".mpc.codes"));
          inputs.push_back(resolve_code(refs.back(), p + ".mpc.codes[" + std::to_string(i) + "]").code);
        }
        const std::string mname = str(field(mj, "matrix", p + ".mpc"), p + ".mpc.matrix");
        const Matrix& a = lookup(ws.matrices_, mname, "matrix", p + ".mpc.matrix");
        auto m = build_mpc(std::move(inputs), a);
        LinearCode c = m.realized();
        out = ResolvedCode{ResolvedCode::Kind::Mpc, std::move(c), {}, std::move(m), refs, mname};
      } else if (j.contains("dual_of")) {
        const std::string src = str(j["dual_of"], p + ".dual_of");
        LinearCode c = resolve_code(src, p + ".dual_of").code.dual();
        out = ResolvedCode{ResolvedCode::Kind::Dual, std::move(c), {}, {}, {src}, {}};
      } else {
        fail(p, "expected one of 'generators', 'principal', 'mpc', 'dual_of'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(p, e.what());
    }
    visiting.erase(name);
    return ws.codes_.emplace(name, std::move(*out)).first->second;
  }

  void run() {
    if (!root.is_object()) fail("(root)", "expected an object");
    static const std::set<std::string> known = {"budgets", "rings", "constants", "maps", "contexts",
                                                "polys", "matrices", "codes", "tasks"};
    for (const auto& [k, v] : root.items())
      if (!known.count(k)) fail(k, "unknown section");

    if (root.contains("budgets")) ws.limits_ = limits_spec(root["budgets"], "budgets", ws.limits_);
    for (const auto& [name, j] : section("rings").items()) ws.rings_.emplace(name, ring_spec(j, "rings." + name));
    for (const auto& [name, j] : section("constants").items()) {
      const std::string p = "constants." + name;
      const Ring& r = lookup(ws.rings_, str(field(j, "ring", p), p + ".ring"), "ring", p + ".ring");
      ws.constants_.insert_or_assign(name, std::make_pair(r, element(r, field(j, "value", p), p + ".value")));
    }
    for (const auto& [name, j] : section("maps").items()) ws.maps_.emplace(name, map_spec(j, "maps." + name));
    for (const auto& [name, j] : section("contexts").items()) {
      const std::string p = "contexts." + name;
      const RingMap& s = lookup(ws.maps_, str(field(j, "sigma", p), p + ".sigma"), "map", p + ".sigma");
      std::optional<RingMap> d;
      if (j.contains("delta")) d = lookup(ws.maps_, str(j["delta"], p + ".delta"), "map", p + ".delta");
      try {
        ws.contexts_.emplace(name, SkewContext::create(s, d, name));
      } catch (const Error& e) {
        fail(p, e.what());
      }
    }
    for (const auto& [name, j] : section("polys").items()) {
      const std::string p = "polys." + name;
      const auto& ctx = lookup(ws.contexts_, str(field(j, "context", p), p + ".context"), "context", p + ".context");
      const Ring& r = ctx->ring();
      if (j.contains("coeffs")) {
        ws.polys_.emplace(name, SkewPoly(ctx, word(r, j["coeffs"], p + ".coeffs")));
      } else {
        const std::string text = str(field(j, "text", p), p + ".text");
        try {
          ws.polys_.emplace(name, SkewPoly::parse(ctx, text, [&](std::string_view n) { return ws.constant(r, n); }));
        } catch (const ParseError& e) {
          fail(p + ".text", e.what());
        }
      }
    }
    for (const auto& [name, j] : section("matrices").items()) {
      const std::string p = "matrices." + name;
      const Ring& r = lookup(ws.rings_, str(field(j, "ring", p), p + ".ring"), "ring", p + ".ring");
      ws.matrices_.emplace(name, matrix_rows(r, field(j, "rows", p), p + ".rows"));
      ws.matrix_order_.push_back(name);
    }
    for (const auto& [name, j] : section("codes").items()) {
      resolve_code(name, "codes." + name);
      ws.code_order_.push_back(name);
    }
    if (root.contains("tasks")) {
      const Json& ts = root["tasks"];
      if (!ts.is_array()) fail("tasks", "expected a list");
      for (std::size_t i = 0; i < ts.size(); ++i) ws.tasks_.push_back(task_spec(ts[i], "tasks[" + std::to_string(i) + "]"));
    }
  }

  const Json& section(const char* key) const {
    static const Json none = Json::object();
    if (!root.contains(key)) return none;
    if (!root[key].is_object()) fail(key, "expected an object of named entries");
    return root[key];
  }

  Limits limits_spec(const Json& j, const std::string& path, Limits base) const {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : j.items()) {
      if (k == "codewords") base.codewords = uint(v, path + ".codewords");
      else if (k == "kernel_ops") base.kernel_ops = uint(v, path + ".kernel_ops");
      else if (k == "max_ring_size") base.max_ring_size = uint(v, path + ".max_ring_size");
      else if (k == "max_cofactor_size") base.max_cofactor_size = uint(v, path + ".max_cofactor_size");
      else fail(path + "." + k, "unknown budget");
    }
    return base;
  }

  TaskSpec task_spec(const Json& j, const std::string& path) const {
    TaskSpec t;
    t.kind = str(field(j, "task", path), path + ".task");
    for (const auto& [k, v] : j.items()) {
      if (k == "task") continue;
      if (k == "budget") {
        t.limits = limits_spec(v, path + ".budget", ws.limits_);
      } else if (v.is_array()) {
        std::string joined;
        for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? "," : "") + str(v[i], path + "." + k);
        t.args[k] = joined;
      } else if (v.is_boolean()) {
        t.args[k] = v.get<bool>() ? "true" : "false";
      } else {
        t.args[k] = str(v, path + "." + k);
      }
    }
    return t;
  }
};

Workspace Workspace::empty() { return Workspace(); }

Workspace Workspace::from_json_text(const std::string& text, const std::string& origin) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  Workspace ws;
  Impl{ws, root, origin, {}}.run();
  return ws;
}

Workspace Workspace::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), path.string());
}

namespace {
template <class T>
const T& find_named(const std::map<std::string, T>& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw ParseError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}
}  // namespace

const Ring& Workspace::ring(const std::string& n) const { return find_named(rings_, n, "ring"); }
const RingMap& Workspace::map(const std::string& n) const { return find_named(maps_, n, "map"); }
const SkewContextPtr& Workspace::context(const std::string& n) const { return find_named(contexts_, n, "context"); }
const SkewPoly& Workspace::poly(const std::string& n) const { return find_named(polys_, n, "poly"); }
const Matrix& Workspace::matrix(const std::string& n) const { return find_named(matrices_, n, "matrix"); }
const ResolvedCode& Workspace::code(const std::string& n) const { return find_named(codes_, n, "code"); }

std::optional<Elem> Workspace::constant(const Ring& r, std::string_view name) const {
  auto it = constants_.find(std::string(name));
  if (it == constants_.end() || it->second.first != r) return std::nullopt;
  return it->second.second;
}

}  // namespace ringmpc
