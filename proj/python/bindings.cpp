#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqk/cli.hpp"
#include "eqk/verification.hpp"

namespace py = pybind11;
using namespace eqk;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Scope parse_scope(const std::string& s) {
  if (s == "X") return Scope::X;
  if (s == "Y") return Scope::Y;
  throw Error(ErrorCode::InvalidInput, "scope must be \"X\" or \"Y\"");
}

// {"exp": [...], "coef": n} terms over Z^n
GroupRingElement element_over(const LatticePtr& l, const py::handle& o) { return element_from_json(from_py(o), l); }

struct PyFan {
  FanPtr fan;

  static PyFan from_spec(const py::dict& spec) {
    JobInput in = parse_job(from_py(spec));
    return PyFan{Fan::build(SymmetricDatum::build(in.datum), in.fan)};
  }
  const SymmetricDatum& datum() const { return fan->datum(); }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equivariant K-theory of complete symmetric varieties of minimal rank";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> eqk_error;
  eqk_error.call_once_and_store_result([&]() { return py::exception<Error>(m, "EqkError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(eqk_error.get_stored(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "run",
      [](const py::dict& spec, const std::string& verb, Int box) {
        JobSpec job{from_py(spec), verb, std::nullopt, box};
        RunResult r;
        {
          py::gil_scoped_release release;
          r = run(job);
        }
        return py::make_tuple(r.exit_code, to_py(r.report));
      },
      py::arg("spec"), py::arg("verb"), py::arg("box") = 2,
      "Run one CLI verb on a job dict; returns (exit_code, report).");
  m.def("verbs", &verbs);

  m.def(
      "congruent_mod",
      [](const py::object& f, const py::object& g, const Vec& chi) {
        auto l = make_lattice("Z^" + std::to_string(chi.size()), chi.size(), "x");
        return congruent_mod(element_over(l, f), element_over(l, g), chi);
      },
      py::arg("f"), py::arg("g"), py::arg("chi"),
      "f = g mod (1 - e^{-chi}); elements are {\"terms\": [{\"exp\", \"coef\"}]} over Z^len(chi).");

  py::class_<PyFan>(m, "Variety")
      .def(py::init(&PyFan::from_spec), py::arg("spec"))
      .def_property_readonly("rank", [](const PyFan& v) { return v.datum().rank(); })
      .def_property_readonly("restricted_rank", [](const PyFan& v) { return v.datum().restricted_rank(); })
      .def_property_readonly("delta_L", [](const PyFan& v) { return v.datum().delta_L(); })
      .def_property_readonly("restricted_simple_roots", [](const PyFan& v) { return v.datum().restricted_simple_roots(); })
      .def_property_readonly("cones", [](const PyFan& v) {
        std::vector<std::string> out;
        for (std::size_t t = 0; t < v.fan->positive_cones().size(); ++t) out.push_back(v.fan->cone_label(t));
        return out;
      })
      .def("describe", [](const PyFan& v) { return to_py(describe(v.datum(), *v.fan)); })
      .def(
          "fixed_points",
          [](const PyFan& v, const std::string& scope) {
            return to_py(fixed_points_json(FixedPointSet(v.fan, parse_scope(scope))));
          },
          py::arg("scope") = "X")
      .def(
          "curves",
          [](const PyFan& v, const std::string& scope) {
            FixedPointSet pts(v.fan, parse_scope(scope));
            return to_py(curves_json(pts, enumerate_curves(pts)));
          },
          py::arg("scope") = "X")
      .def(
          "check_kg",
          [](const PyFan& v, const py::list& elements) {
            std::vector<GroupRingElement> f;
            for (const auto& e : elements) f.push_back(element_over(v.datum().character_lattice(), e));
            return to_py(to_json(kg_membership(*v.fan, f)));
          },
          py::arg("elements"), "One element of R(T) per maximal cone.")
      .def(
          "check_line_bundle",
          [](const PyFan& v, const Vec& u, const std::string& scope) {
            auto pts = std::make_shared<const FixedPointSet>(v.fan, parse_scope(scope));
            return to_py(to_json(kt_membership(line_bundle_class(pts, u))));
          },
          py::arg("u"), py::arg("scope") = "X")
      .def("presentation", [](const PyFan& v) { return to_py(to_json(presentation_check(v.fan))); })
      .def("splitting_check", [](const PyFan& v) { return to_py(to_json(splitting_check(v.datum()))); })
      .def(
          "verify",
          [](const PyFan& v, std::size_t samples, std::uint64_t seed) {
            SuiteOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            std::vector<CriterionResult> res;
            {
              py::gil_scoped_release release;
              res = run_verification(v.fan, opt);
            }
            py::list out;
            for (const auto& r : res) out.append(to_py(to_json(r)));
            return out;
          },
          py::arg("samples") = 100, py::arg("seed") = SuiteOptions{}.seed);
}
