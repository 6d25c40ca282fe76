#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "perispline/corpus.hpp"
#include "perispline/gram.hpp"
#include "perispline/projection.hpp"
#include "perispline/quasi.hpp"

namespace py = pybind11;
using namespace perispline;

namespace {

TestFunction to_function(const py::object& u, std::uint64_t seed) {
  if (py::isinstance<py::str>(u)) return corpus_function(u.cast<std::string>(), seed);
  TestFunction f;
  f.label = "callable";
  f.value = u.cast<std::function<double(double)>>();
  return f;
}

py::object to_py_int(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::dict report_to_dict(const StabilityReport& rep) {
  py::dict d;
  d["l"] = rep.l;
  d["applicable"] = rep.applicable;
  d["num_l2"] = rep.num_l2;
  d["den_l2"] = rep.den_l2;
  d["ratio_l2"] = rep.ratio_l2;
  d["num_sup"] = rep.num_sup;
  d["den_sup"] = rep.den_sup;
  d["ratio_sup"] = rep.ratio_sup;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Periodic polynomial splines on a uniform mesh: B-spline bases, "
            "circulant Gram systems, L2 projection, quasi-interpolation.";

  py::class_<SplineSpace>(m, "SplineSpace")
      .def(py::init<int, int>(), py::arg("r"), py::arg("N"))
      .def_readonly("r", &SplineSpace::r)
      .def_readonly("N", &SplineSpace::N)
      .def_property_readonly("h", &SplineSpace::h)
      .def("__repr__", [](const SplineSpace& s) {
        return "SplineSpace(r=" + std::to_string(s.r) + ", N=" + std::to_string(s.N) + ")";
      });

  py::class_<PeriodicSpline>(m, "PeriodicSpline")
      .def_readonly("space", &PeriodicSpline::space)
      .def_readonly("coeffs", &PeriodicSpline::coeffs)
      .def("__call__", [](const PeriodicSpline& s, double x) { return spline_eval(s, x); },
           py::arg("x"))
      .def("derivative", [](const PeriodicSpline& s) { return spline_derivative(s); })
      .def("sup_norm",
           [](const PeriodicSpline& s, int spc) { return sup_norm(s, spc); },
           py::arg("samples_per_cell") = 32);

  m.def("cardinal_bspline", &cardinal_bspline, py::arg("r"), py::arg("x"));
  m.def("cardinal_bspline_fourier", &cardinal_bspline_fourier, py::arg("r"), py::arg("x"));
  m.def("basis_eval", &basis_eval, py::arg("space"), py::arg("j"), py::arg("x"));
  m.def("make_spline", &make_spline, py::arg("space"), py::arg("coeffs"));

  m.def("gram_stencil", &gram_stencil, py::arg("r"));
  m.def("spectral_bounds",
        [](int r) {
          const SpectralBounds b = spectral_bounds(r);
          return py::make_tuple(b.lower, b.upper);
        },
        py::arg("r"), "(lower, upper) extrema of the Gram symbol.");
  m.def("inverse_first_row",
        [](int r, int N) { return inverse_first_row(make_gram_system(SplineSpace(r, N))); },
        py::arg("r"), py::arg("N"), "First row of the inverse Gram matrix.");
  m.def("demko_bound",
        [](double lmin, double lmax, int bandwidth) {
          const DemkoBound d = demko_bound(lmin, lmax, bandwidth);
          return py::make_tuple(d.C, d.q);
        },
        py::arg("lambda_min"), py::arg("lambda_max"), py::arg("bandwidth"),
        "(C, q) with |inv_ij| <= C q^{-|i-j|} for banded SPD matrices.");

  m.def("corpus_labels", &corpus_labels);
  m.def("project",
        [](const SplineSpace& space, const py::object& u, int nodes_per_cell,
           std::uint64_t seed) { return project(space, to_function(u, seed), nodes_per_cell).spline; },
        py::arg("space"), py::arg("u"), py::arg("nodes_per_cell") = 0,
        py::arg("seed") = kDefaultSeed,
        "L2 projection of a corpus label or a 1-periodic callable.");
  m.def("l2_error",
        [](const py::object& u, const PeriodicSpline& s, double shift, int nodes_per_cell,
           std::uint64_t seed) {
          return l2_error(to_function(u, seed), s, shift, nodes_per_cell);
        },
        py::arg("u"), py::arg("spline"), py::arg("shift") = 0.0, py::arg("nodes_per_cell") = 0,
        py::arg("seed") = kDefaultSeed);
  m.def("sobolev_seminorm", &sobolev_seminorm, py::arg("spline"), py::arg("l"));
  m.def("inverse_inequality_constant", &inverse_inequality_constant, py::arg("space"));
  m.def("stability_report",
        [](const SplineSpace& space, const std::string& label, int l, std::uint64_t seed) {
          return report_to_dict(stability_report(space, corpus_function(label, seed), l));
        },
        py::arg("space"), py::arg("label"), py::arg("l") = 0, py::arg("seed") = kDefaultSeed);

  m.def("tw_delta",
        [](int r) {
          std::vector<std::string> out;
          for (const BigRational& x : tw_delta(r).delta) out.push_back(x.str());
          return out;
        },
        py::arg("r"), "Smoothing weights delta_0..delta_{r-1} as exact rational strings.");
  m.def("tw_stencil",
        [](int r) {
          const QuasiCoefficients qc = tw_coefficients(r);
          std::vector<std::string> exact;
          for (const BigRational& x : qc.exact) exact.push_back(x.str());
          return py::make_tuple(exact, qc.stencil);
        },
        py::arg("r"), "(exact rational strings, float values) of the nodal stencil.");
  m.def("quasi_interpolate",
        [](const SplineSpace& space, const py::object& u, std::uint64_t seed) {
          return quasi_interpolate(space, tw_coefficients(space.r), to_function(u, seed));
        },
        py::arg("space"), py::arg("u"), py::arg("seed") = kDefaultSeed);
  m.def("quasi_alignment_shift", &quasi_alignment_shift, py::arg("r"));
  m.def("quasi_sup_bound", [](int r) { return quasi_sup_bound(tw_coefficients(r)); },
        py::arg("r"));
  m.def("binomial_alternating_sum",
        [](int l, int k, int shift) { return to_py_int(binomial_alternating_sum(l, k, shift)); },
        py::arg("l"), py::arg("k"), py::arg("shift") = 0);
}
