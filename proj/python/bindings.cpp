#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "slcopula/association.hpp"
#include "slcopula/asymmetry.hpp"
#include "slcopula/choquet.hpp"
#include "slcopula/diagonal.hpp"
#include "slcopula/errors.hpp"
#include "slcopula/extremity.hpp"
#include "slcopula/json_io.hpp"
#include "slcopula/semilinear.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::object to_python(const slc::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

slc::Json from_python(const py::object& obj) {
  const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return slc::parse_json(text);
}

slc::DiscreteMeasure measure_from_pairs(const std::vector<std::pair<double, double>>& atoms) {
  std::vector<slc::Atom> out;
  out.reserve(atoms.size());
  for (const auto& [m, w] : atoms) out.push_back({m, w});
  return slc::DiscreteMeasure(std::move(out));
}

slc::Tolerance tolerance(int quad_n, double eps_measure) {
  slc::Tolerance tol;
  tol.quad_n = quad_n;
  tol.eps_measure = eps_measure;
  tol.check();
  return tol;
}

py::dict triple(const slc::MeasureTriple& t) {
  return py::dict("rho"_a = t.rho, "gamma"_a = t.gamma, "footrule"_a = t.footrule);
}

}  // namespace

PYBIND11_MODULE(_slcopula, m) {
  m.doc() = "Semilinear copulas, semi-copulas and quasi-copulas";

  auto base = py::register_exception<slc::Error>(m, "SlcError", PyExc_ValueError);
  py::register_exception<slc::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<slc::SpecError>(m, "SpecError", base.ptr());
  py::register_exception<slc::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<slc::NotAMixtureError>(m, "NotAMixtureError", base.ptr());

  py::class_<slc::Diagonal>(m, "Diagonal")
      .def_static("family_m", &slc::Diagonal::family_m, "m"_a)
      .def_static("family_p", &slc::Diagonal::family_p, "p"_a)
      .def_static("family_beta", &slc::Diagonal::family_beta, "beta"_a)
      .def_static("step_right", &slc::Diagonal::step_right, "a"_a)
      .def_static("step_left", &slc::Diagonal::step_left, "a"_a)
      .def_static(
          "mixture", [](const std::vector<std::pair<double, double>>& atoms) {
            return slc::Diagonal::mixture(measure_from_pairs(atoms));
          },
          "atoms"_a, "Choquet mixture over (m, weight) pairs; weights must sum to 1.")
      .def_static(
          "tabulated",
          [](const std::vector<std::pair<double, double>>& knots) {
            std::vector<slc::Knot> k;
            for (const auto& [x, y] : knots) k.push_back({x, y});
            return slc::Diagonal::tabulated(std::move(k));
          },
          "knots"_a)
      .def_static(
          "from_spec", [](const py::object& spec) { return slc::diagonal_from_json(from_python(spec)); }, "spec"_a,
          "Build from a JSON-style dict such as {'variant': 'm', 'm': 0.5}.")
      .def("to_spec", [](const slc::Diagonal& d) { return to_python(slc::to_json(d)); })
      .def("reflect", &slc::reflect)
      .def("__call__", [](const slc::Diagonal& d, double t) { return d(t); }, "t"_a)
      .def("derivative", py::overload_cast<double>(&slc::Diagonal::derivative, py::const_), "t"_a)
      .def_property_readonly("kinks", &slc::Diagonal::kinks)
      .def_property_readonly("jumps", &slc::Diagonal::jumps)
      .def("__repr__", [](const slc::Diagonal& d) { return "Diagonal(" + slc::to_json(d).dump() + ")"; });

  py::class_<slc::Semilinear>(m, "Semilinear")
      .def(py::init<slc::Diagonal>(), "diagonal"_a)
      .def_property_readonly("diagonal", &slc::Semilinear::diagonal)
      .def_property_readonly("declared_class",
                             [](const slc::Semilinear& c) { return slc::to_string(c.declared_class()); })
      .def("__call__", &slc::Semilinear::operator(), "u"_a, "v"_a)
      .def("volume", &slc::Semilinear::volume, "u1"_a, "u2"_a, "v1"_a, "v2"_a)
      .def("survival", &slc::Semilinear::survival, "u"_a, "v"_a)
      .def("conditional_cdf", &slc::Semilinear::conditional_cdf, "u"_a, "t"_a)
      .def(
          "sample",
          [](const slc::Semilinear& c, std::size_t count, std::uint64_t seed) {
            py::gil_scoped_release release;
            return slc::sample(c, count, seed);
          },
          "count"_a, "seed"_a = 0)
      .def(
          "positivity",
          [](const slc::Semilinear& c, int n) { return to_python(slc::to_json(slc::positivity_oracle(c, n))); },
          "n"_a = 200)
      .def("chi", [](const slc::Semilinear& c, double u, double v) { return slc::chi(c, u, v); }, "u"_a, "v"_a)
      .def("varrho", [](const slc::Semilinear& c, double u, double v) { return slc::varrho(c, u, v); }, "u"_a, "v"_a)
      .def("xi", [](const slc::Semilinear& c, double u, double v) { return slc::xi(c, u, v); }, "u"_a, "v"_a);

  m.def(
      "validate", [](const slc::Diagonal& d) { return to_python(slc::to_json(slc::validate(d))); }, "diagonal"_a);
  m.def(
      "classify",
      [](const slc::Diagonal& d, const std::string& cls, double eps_measure) {
        const slc::Tolerance tol = tolerance(2048, eps_measure);
        if (cls == "copula") return to_python(slc::to_json(slc::classify_copula(d, tol)));
        if (cls == "semicopula") return to_python(slc::to_json(slc::classify_semicopula(d, tol)));
        if (cls == "quasicopula") return to_python(slc::to_json(slc::classify_quasicopula(d, tol)));
        throw slc::SpecError("unknown class '" + cls + "'");
      },
      "diagonal"_a, "cls"_a, "eps_measure"_a = 1e-3);

  m.def(
      "closed_form_measures",
      [](const slc::Diagonal& d) -> py::object {
        const auto t = slc::closed_form(d);
        if (!t) return py::none();
        return triple(*t);
      },
      "diagonal"_a);
  m.def(
      "numeric_measures",
      [](const slc::Semilinear& c, int quad_n) { return triple(slc::numeric_measures(c, tolerance(quad_n, 1e-3))); },
      "copula"_a, "quad_n"_a = 2048);

  m.def(
      "asymmetry_bounds",
      [](double u, double v) { return to_python(slc::to_json(slc::bounds(u, v))); }, "u"_a, "v"_a);
  m.def(
      "attain_bounds",
      [](double u, double v, int grid) { return to_python(slc::to_json(slc::attain_bounds(u, v, grid))); }, "u"_a,
      "v"_a, "param_grid"_a = 200);

  m.def(
      "to_piecewise",
      [](const std::vector<std::pair<double, double>>& atoms) {
        return to_python(slc::to_json(slc::to_piecewise(measure_from_pairs(atoms))));
      },
      "atoms"_a);
  m.def(
      "recover_measure",
      [](const py::object& piecewise) {
        const slc::DiscreteMeasure mu = slc::recover_measure(slc::piecewise_from_json(from_python(piecewise)));
        std::vector<std::pair<double, double>> out;
        for (const auto& a : mu.atoms()) out.emplace_back(a.m, a.w);
        return out;
      },
      "piecewise"_a);
}
