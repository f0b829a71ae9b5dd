#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wadefect/catalog.hpp"
#include "wadefect/defect.hpp"
#include "wadefect/scenario_io.hpp"
#include "wadefect/selfcheck.hpp"
#include "wadefect/smith.hpp"

namespace py = pybind11;
using namespace wadefect;

namespace {

Integer to_integer(const py::handle& x) { return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(x)))); }

py::int_ to_python(const Integer& x) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10))); }

// Rows are Python sequences of ints; the column count is taken from `cols` when there are no rows.
IntMatrix to_matrix(const py::sequence& rows, std::size_t cols = 0) {
  std::vector<IntVector> out;
  for (const auto& r : rows) {
    IntVector row;
    for (const auto& x : py::reinterpret_borrow<py::sequence>(r)) row.push_back(to_integer(x));
    out.push_back(std::move(row));
  }
  if (!out.empty()) cols = out[0].size();
  return IntMatrix::from_rows(out, cols);
}

py::list to_python(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_python(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list to_python(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_python(x));
  return out;
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json to_json(const py::object& o) { return parse_json_text(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

py::dict invariants_dict(const FinAbInvariants& inv) {
  py::dict d;
  d["invariant_factors"] = to_python(inv.factors);
  d["free_rank"] = inv.free_rank;
  d["pretty"] = inv.pretty();
  return d;
}

// Subgroup selection as in the command line: "full", a name, "S:i", "Sc:i".
Subgroup select(const LoadedScenario& s, const std::string& selector) {
  if (selector == "full") return whole_group(*s.scenario.group);
  const auto colon = selector.find(':');
  if (colon != std::string::npos) {
    const std::string head = selector.substr(0, colon);
    const std::size_t i = std::stoul(selector.substr(colon + 1));
    const auto& list = head == "S" ? s.scenario.s_subgroups : s.scenario.sc_subgroups;
    if ((head != "S" && head != "Sc") || i >= list.size()) throw LookupError("bad subgroup selector " + selector);
    return list[i];
  }
  for (std::size_t i = 0; i < s.s_names.size(); ++i)
    if (s.s_names[i] == selector) return s.scenario.s_subgroups[i];
  for (std::size_t i = 0; i < s.sc_names.size(); ++i)
    if (s.sc_names[i] == selector) return s.scenario.sc_subgroups[i];
  throw LookupError("unknown subgroup selector \"" + selector + "\"");
}

}  // namespace

PYBIND11_MODULE(wa_defect, m) {
  m.doc() = "Weak approximation defect of reductive groups from finite Galois data";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<LookupError>(m, "LookupError", base.ptr());
  py::register_exception<GroupError>(m, "GroupError", base.ptr());
  py::register_exception<ModuleError>(m, "ModuleError", base.ptr());
  py::register_exception<OracleMismatch>(m, "OracleMismatch", base.ptr());

  m.def("smith_normal_form", [](const py::sequence& a, std::size_t cols) {
        const auto s = smith_normal_form(to_matrix(a, cols));
        py::dict d;
        d["u"] = to_python(s.u);
        d["d"] = to_python(s.d);
        d["v"] = to_python(s.v);
        d["diagonal"] = to_python(s.diagonal);
        return d;
      }, py::arg("rows"), py::arg("cols") = 0, "U, D, V with U A V = D");
  m.def("smith_diagonal", [](const py::sequence& a, std::size_t cols) { return to_python(smith_diagonal(to_matrix(a, cols))); },
        py::arg("rows"), py::arg("cols") = 0);
  m.def("hermite_basis", [](const py::sequence& a, std::size_t cols) { return to_python(hermite_basis(to_matrix(a, cols))); },
        py::arg("rows"), py::arg("cols") = 0, "column Hermite basis of the lattice spanned by the columns");
  m.def("kernel_basis", [](const py::sequence& a, std::size_t cols) { return to_python(kernel_basis(to_matrix(a, cols))); },
        py::arg("rows"), py::arg("cols") = 0, "saturated basis of the integer kernel, as columns");
  m.def("cokernel", [](const py::sequence& a, std::size_t cols) {
        const IntMatrix rel = to_matrix(a, cols);
        return invariants_dict(cokernel_invariants(AbelianPresentation(rel.rows(), rel)));
      }, py::arg("rows"), py::arg("cols") = 0, "invariants of Z^rows modulo the column span");

  m.def("abelianization", [](const std::string& group) { return invariants_dict(abelianization(*named_group(group))); });

  py::class_<LoadedScenario>(m, "Scenario")
      .def_static("from_json", [](const py::object& doc) { return load_scenario(to_json(doc)); })
      .def_static("from_text", [](const std::string& text) { return load_scenario(parse_json_text(text)); })
      .def_static("from_file", [](const std::string& path) { return load_scenario(read_json_file(path)); })
      .def_static("from_catalog", [](const std::string& name) { return load_scenario(catalog_entry(name).document); })
      .def_property_readonly("name", [](const LoadedScenario& s) { return s.name; })
      .def_property_readonly("group_order", [](const LoadedScenario& s) { return s.scenario.group->order(); })
      .def_property_readonly("module_rank", [](const LoadedScenario& s) { return s.scenario.module.rank(); })
      .def("defect", [](const LoadedScenario& s, bool use_shortcuts) {
            const auto r = defect(s.scenario, DefectOptions{use_shortcuts});
            return to_python(result_document(r.invariants, r.shortcut, r.timings_ms));
          }, py::arg("use_shortcuts") = true, "result document as a dict")
      .def("h1", [](const LoadedScenario& s, const std::string& selector) {
            return invariants_dict(h1(s.scenario.module, select(s, selector)));
          }, py::arg("subgroup") = "full")
      .def("h1_bar", [](const LoadedScenario& s, const std::string& selector) {
            return invariants_dict(h1_bar(s.scenario.module, select(s, selector)));
          }, py::arg("subgroup") = "full");

  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name) { return to_python(catalog_entry(name).document); });
  m.def("selfcheck", [](std::uint64_t seed) {
        SelfcheckOptions options;
        options.seed = seed;
        py::list out;
        for (const auto& o : run_selfcheck(options)) out.append(py::make_tuple(o.name, o.passed, o.detail));
        return out;
      }, py::arg("seed") = 1);
}
