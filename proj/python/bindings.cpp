// Python bindings. Ring elements cross the boundary as literal strings
// ("alpha+1", "(2,2)") or plain integers.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringmpc/errors.hpp"
#include "ringmpc/examples.hpp"
#include "ringmpc/matrix_product.hpp"
#include "ringmpc/properties.hpp"
#include "ringmpc/skew_poly.hpp"
#include "ringmpc/tasks.hpp"
#include "ringmpc/workspace.hpp"

namespace py = pybind11;
using namespace ringmpc;

namespace {

Elem to_elem(const Ring& r, const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return r.from_int(h.cast<std::int64_t>());
  return r.parse(h.cast<std::string>());
}

Word to_word(const Ring& r, const py::iterable& xs) {
  Word w;
  for (auto x : xs) w.push_back(to_elem(r, x));
  return w;
}

std::vector<std::string> fmt_word(const Ring& r, const Word& w) {
  std::vector<std::string> out;
  for (Elem e : w) out.push_back(r.format(e));
  return out;
}

Matrix to_matrix(const Ring& r, const py::iterable& rows, std::optional<std::size_t> cols = std::nullopt) {
  std::vector<Word> rs;
  for (auto row : rows) rs.push_back(to_word(r, row.cast<py::iterable>()));
  const std::size_t c = cols ? *cols : (rs.empty() ? 0 : rs[0].size());
  for (const auto& w : rs)
    if (w.size() != c) throw DimensionError("rows of different lengths");
  return Matrix::from_rows(r, c, rs);
}

std::vector<std::vector<std::string>> fmt_matrix(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m.row_list()) out.push_back(fmt_word(m.ring(), row));
  return out;
}

py::int_ to_py(const Count& c) { return py::int_(py::str(c.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matrix-product codes over finite commutative rings and skew polynomial codes";

  static py::exception<Error> base(m, "RingmpcError", PyExc_RuntimeError);
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());
  py::register_exception<AxiomViolation>(m, "AxiomViolation", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<UndefinedDistance>(m, "UndefinedDistance", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Limits>(m, "Limits")
      .def(py::init<>())
      .def_readwrite("codewords", &Limits::codewords)
      .def_readwrite("kernel_ops", &Limits::kernel_ops)
      .def_readwrite("max_ring_size", &Limits::max_ring_size)
      .def_readwrite("max_cofactor_size", &Limits::max_cofactor_size);

  py::class_<Ring>(m, "Ring")
      .def_static("integers_mod", &Ring::integers_mod, py::arg("m"))
      .def_static("galois_field", &Ring::galois_field, py::arg("p"), py::arg("k"),
                  py::arg("modulus") = std::vector<std::uint32_t>{})
      .def_static("product", &Ring::product, py::arg("factors"))
      .def_property_readonly("name", &Ring::name)
      .def_property_readonly("size", &Ring::size)
      .def("elements", [](const Ring& r) { return fmt_word(r, r.elements()); })
      .def("normalize", [](const Ring& r, const py::handle& x) { return r.format(to_elem(r, x)); })
      .def("add", [](const Ring& r, py::handle a, py::handle b) { return r.format(r.add(to_elem(r, a), to_elem(r, b))); })
      .def("mul", [](const Ring& r, py::handle a, py::handle b) { return r.format(r.mul(to_elem(r, a), to_elem(r, b))); })
      .def("is_unit", [](const Ring& r, py::handle a) { return r.is_unit(to_elem(r, a)); })
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
      .def("__repr__", [](const Ring& r) { return "Ring(" + r.name() + ")"; });

  py::class_<Matrix>(m, "Matrix")
      .def(py::init([](const Ring& r, const py::iterable& rows) { return to_matrix(r, rows); }))
      .def_property_readonly("ring", &Matrix::ring)
      .def_property_readonly("rows", &Matrix::rows)
      .def_property_readonly("cols", &Matrix::cols)
      .def("to_list", &fmt_matrix)
      .def("transpose", &Matrix::transpose)
      .def("is_zero", &Matrix::is_zero)
      .def("__mul__", [](const Matrix& a, const Matrix& b) { return a * b; })
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
      .def("__repr__", &Matrix::to_string);

  m.def("determinant", [](const Matrix& a) { return a.ring().format(determinant(a)); });
  m.def("inverse", [](const Matrix& a) { return inverse(a); });
  m.def("is_full_rank", &is_full_rank);

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init([](const Ring& r, const py::iterable& rows, std::optional<std::size_t> length) {
             return LinearCode(to_matrix(r, rows, length));
           }),
           py::arg("ring"), py::arg("generators"), py::arg("length") = py::none())
      .def(py::init<Matrix>())
      .def_property_readonly("ring", &LinearCode::ring)
      .def_property_readonly("length", &LinearCode::length)
      .def_property_readonly("generators", &LinearCode::generators)
      .def("cardinality", [](const LinearCode& c) { return to_py(c.cardinality()); })
      .def("freeness", [](const LinearCode& c) {
        const auto f = c.freeness();
        return py::make_tuple(f.free, f.rank);
      })
      .def("min_distance", &LinearCode::min_distance, py::arg("limits") = Limits{})
      .def("minimum_weight_words", [](const LinearCode& c, const Limits& l) {
        std::vector<std::vector<std::string>> out;
        for (const auto& w : c.minimum_weight_words(l)) out.push_back(fmt_word(c.ring(), w));
        return out;
      }, py::arg("limits") = Limits{})
      .def("codewords", [](const LinearCode& c, const Limits& l) {
        std::vector<std::vector<std::string>> out;
        for (const auto& w : c.codewords(l)) out.push_back(fmt_word(c.ring(), w));
        return out;
      }, py::arg("limits") = Limits{})
      .def("contains", [](const LinearCode& c, const py::iterable& v) { return c.contains(to_word(c.ring(), v)); })
      .def("dual", &LinearCode::dual)
      .def("duality", [](const LinearCode& c, const Limits& l) { return to_string(c.duality(l).cls); },
           py::arg("limits") = Limits{});
  m.def("code_equals", &code_equals);

  py::class_<MatrixProductCode>(m, "MatrixProductCode")
      .def(py::init<std::vector<LinearCode>, Matrix>())
      .def_property_readonly("inputs", &MatrixProductCode::inputs)
      .def_property_readonly("matrix", &MatrixProductCode::matrix)
      .def_property_readonly("realized", &MatrixProductCode::realized);
  m.def("build_mpc", &build_mpc, py::arg("inputs"), py::arg("a"));
  m.def("distance_lower_bound", &distance_lower_bound, py::arg("inputs"), py::arg("a"), py::arg("limits") = Limits{});
  m.def("sharpness_witness", [](const std::vector<LinearCode>& in, const Matrix& a, const Limits& l) {
    const auto w = sharpness_witness(in, a, l);
    return py::make_tuple(to_string(w.status), w.detail);
  }, py::arg("inputs"), py::arg("a"), py::arg("limits") = Limits{});
  m.def("mpc_dual", &mpc_dual, py::arg("inputs"), py::arg("a"), py::arg("limits") = Limits{});
  m.def("row_distances", [](const Matrix& a, const Limits& l) { return row_codes(a, l).distances; },
        py::arg("a"), py::arg("limits") = Limits{});

  py::class_<RingMap>(m, "RingMap")
      .def_static("identity", &RingMap::identity)
      .def_static("frobenius", &RingMap::frobenius, py::arg("ring"), py::arg("power") = 1)
      .def_static("permute_components", &RingMap::permute_components)
      .def_static("inner_derivation", [](const RingMap& s, py::handle beta) {
        return RingMap::inner_derivation(s, to_elem(s.ring(), beta));
      })
      .def("__call__", [](const RingMap& f, py::handle a) { return f.ring().format(f(to_elem(f.ring(), a))); });

  // pybind11 holders cannot point to const, so the context is exposed mutable
  // but has no mutating methods.
  using MutCtx = std::shared_ptr<SkewContext>;
  py::class_<SkewContext, MutCtx>(m, "SkewContext")
      .def_static("create", [](const RingMap& sigma, std::optional<RingMap> delta, const std::string& name) {
        return std::const_pointer_cast<SkewContext>(SkewContext::create(sigma, std::move(delta), name));
      }, py::arg("sigma"), py::arg("delta") = py::none(), py::arg("name") = "")
      .def_property_readonly("ring", &SkewContext::ring)
      .def_property_readonly("name", &SkewContext::name)
      .def_property_readonly("sigma_invertible", &SkewContext::sigma_invertible);

  py::class_<SkewPoly>(m, "SkewPoly")
      .def_static("parse", [](const MutCtx& ctx, const std::string& text, const std::map<std::string, std::string>& names) {
        const Ring& r = ctx->ring();
        std::map<std::string, Elem> vals;
        for (const auto& [k, v] : names) vals[k] = r.parse(v);
        return SkewPoly::parse(ctx, text, [&](std::string_view n) -> std::optional<Elem> {
          auto it = vals.find(std::string(n));
          if (it == vals.end()) return std::nullopt;
          return it->second;
        });
      }, py::arg("context"), py::arg("text"), py::arg("names") = std::map<std::string, std::string>{})
      .def_property_readonly("degree", &SkewPoly::degree)
      .def("coefficients", [](const SkewPoly& p) { return fmt_word(p.ring(), p.coefficients()); })
      .def("__add__", [](const SkewPoly& a, const SkewPoly& b) { return a + b; })
      .def("__sub__", [](const SkewPoly& a, const SkewPoly& b) { return a - b; })
      .def("__mul__", [](const SkewPoly& a, const SkewPoly& b) { return a * b; })
      .def("__eq__", [](const SkewPoly& a, const SkewPoly& b) { return a == b; })
      .def("__str__", &SkewPoly::to_string)
      .def("__repr__", [](const SkewPoly& p) { return "SkewPoly(" + p.to_string() + ")"; });

  m.def("right_divmod", [](const SkewPoly& p, const SkewPoly& g) {
    auto d = right_divmod(p, g);
    return py::make_tuple(d.quotient, d.remainder);
  });
  m.def("left_divmod", [](const SkewPoly& p, const SkewPoly& g) {
    auto d = left_divmod(p, g);
    return py::make_tuple(d.quotient, d.remainder);
  });
  m.def("companion_matrix", &companion_matrix);
  m.def("skew_reciprocal", &skew_reciprocal);

  py::class_<PrincipalSkewCode>(m, "PrincipalSkewCode")
      .def_readonly("g", &PrincipalSkewCode::g)
      .def_readonly("f", &PrincipalSkewCode::f)
      .def_readonly("n", &PrincipalSkewCode::n)
      .def_readonly("k", &PrincipalSkewCode::k)
      .def_readonly("generator", &PrincipalSkewCode::generator)
      .def_readonly("realized", &PrincipalSkewCode::realized)
      .def_readonly("h", &PrincipalSkewCode::h)
      .def_readonly("parity", &PrincipalSkewCode::parity);
  m.def("principal_code", &principal_code, py::arg("g"), py::arg("f"));
  m.def("build_skew_mpc", &build_skew_mpc, py::arg("codes"), py::arg("a"));
  m.def("constacyclic_selfdual_criteria", [](const SkewPoly& g, const SkewPoly& f) {
    const auto c = constacyclic_selfdual_criteria(g, f);
    py::dict d;
    d["a"] = g.ring().format(c.a);
    d["cond1"] = c.cond1;
    d["cond2_per_l"] = c.cond2_per_l;
    d["self_dual"] = c.direct;
    return d;
  });

  m.def("verify_examples", [] {
    py::list out;
    for (const auto& c : examples::verify_examples()) {
      py::dict d;
      d["id"] = c.id;
      d["golden"] = c.golden;
      d["passed"] = c.passed;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  });
  m.def("run_suite", [](const std::string& name, std::uint64_t seed, std::optional<std::size_t> count) {
    const auto r = properties::run_suite(name, seed, count.value_or(properties::default_count(name)));
    py::dict d;
    d["cases"] = r.cases;
    d["passed"] = r.passed;
    d["skipped"] = r.skipped;
    d["tallies"] = r.tallies;
    d["counterexamples"] = r.counterexamples;
    return d;
  }, py::arg("name"), py::arg("seed") = 0, py::arg("count") = py::none());
  m.def("run_config", [](const std::string& text, std::uint64_t seed, const std::string& format) {
    auto ws = Workspace::from_json_text(text);
    Report rep;
    const int code = run_tasks(ws, ws.tasks(), RunOptions{seed, std::nullopt, false}, rep);
    return py::make_tuple(code, format == "csv" ? rep.to_csv() : rep.to_text());
  }, py::arg("config"), py::arg("seed") = 0, py::arg("format") = "text");
}
