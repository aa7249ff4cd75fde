// Python bindings for the main operations: field construction, code building,
// verification against the closed-form distributions, character sums, arc
// checks, and optimality labelling. Reports are returned as plain dicts
// parsed from the same JSON serialization the command-line tool emits.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ovalcode/charsum.hpp"
#include "ovalcode/families.hpp"

namespace py = pybind11;
using namespace ovalcode;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

// The native field handle is a shared_ptr-to-const, which pybind11 cannot use
// as a holder type; this wrapper owns the handle instead.
struct PyField {
  FieldPtr f;
};

}  // namespace

PYBIND11_MODULE(pyovalcode, mod) {
  mod.doc() = "workbench for hyperoval and conic codes and their subfield codes";

  py::class_<PyField>(mod, "Field")
      .def_static(
          "make",
          [](std::uint64_t p, unsigned m, std::optional<std::vector<int>> modulus) {
            return PyField{Field::make(p, m, modulus)};
          },
          py::arg("p"), py::arg("m"), py::arg("modulus") = std::nullopt)
      .def_property_readonly("p", [](const PyField& f) { return f.f->p(); })
      .def_property_readonly("m", [](const PyField& f) { return f.f->m(); })
      .def_property_readonly("q", [](const PyField& f) { return f.f->q(); })
      .def("modulus", [](const PyField& f) { return f.f->modulus(); })
      .def("generator", [](const PyField& f) { return f.f->generator(); })
      .def("add", [](const PyField& f, Elem a, Elem b) { return f.f->add(a, b); })
      .def("mul", [](const PyField& f, Elem a, Elem b) { return f.f->mul(a, b); })
      .def("inv", [](const PyField& f, Elem a) { return f.f->inv(a); })
      .def("pow", [](const PyField& f, Elem a, std::uint64_t e) { return f.f->pow(a, e); })
      .def("trace", [](const PyField& f, Elem a) { return f.f->trace(a); })
      .def("elements", [](const PyField& f) { return f.f->elements(); });

  mod.def(
      "build_code",
      [](const std::string& family, std::uint64_t p, unsigned m,
         std::optional<std::vector<int>> modulus) {
        BuiltCode built = build_family_code(parse_family(family), p, m, modulus);
        return json_to_py(code_to_json(built));
      },
      py::arg("family"), py::arg("p"), py::arg("m"), py::arg("modulus") = std::nullopt,
      "construct a family code; returns parameters and generator matrix as a dict");

  mod.def(
      "verify",
      [](const std::string& family, std::uint64_t p, unsigned m, std::uint64_t budget,
         std::optional<std::vector<int>> modulus) {
        VerifyReport r = verify_family(parse_family(family), p, m, budget, modulus);
        return json_to_py(report_to_json(r));
      },
      py::arg("family"), py::arg("p"), py::arg("m"),
      py::arg("budget") = kDefaultEnumerationBudget, py::arg("modulus") = std::nullopt,
      "enumerate the weight distribution and compare to the closed form");

  mod.def(
      "predicted_distribution",
      [](const std::string& family, std::uint64_t p, unsigned m) -> py::object {
        Family fam = parse_family(family);
        auto pred = predict_family(fam, p, m);
        if (!pred) return py::none();
        bool over_extension = fam == Family::HyperovalTranslation ||
                              fam == Family::HyperovalSegre || fam == Family::Conic;
        std::uint64_t q = 1;
        for (unsigned i = 0; over_extension && i < m; ++i) q *= p;
        return json_to_py(
            distribution_to_json(pred->merged(), pred->k, over_extension ? q : p));
      },
      py::arg("family"), py::arg("p"), py::arg("m"),
      "closed-form weight distribution, or None when no oracle applies");

  mod.def(
      "gauss_sum",
      [](std::uint64_t p, unsigned m) {
        auto f = Field::make(p, m);
        return py::make_tuple(gauss_sum_quadratic_exhaustive(*f).value(),
                              gauss_sum_quadratic_closed_form(*f));
      },
      py::arg("p"), py::arg("m"),
      "quadratic Gauss sum as (exhaustive, closed-form) complex values");

  mod.def(
      "is_o_polynomial",
      [](unsigned m, const std::vector<Elem>& coeffs) {
        auto f = Field::make(2, m);
        OPolyCheck check = is_o_polynomial(*f, coeffs);
        return py::make_tuple(check.ok, check.reason);
      },
      py::arg("m"), py::arg("coeffs"),
      "check the coefficient list defines an o-polynomial over GF(2^m)");

  mod.def(
      "optimality_label",
      [](std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t p) {
        return to_string(optimality_label(n, k, d, p, BestKnownTable::bundled()));
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("p"),
      "label [n,k,d] over GF(p) against the bundled best-known table");

  py::register_exception<field_error>(mod, "FieldError");
  py::register_exception<budget_error>(mod, "BudgetError");
}
