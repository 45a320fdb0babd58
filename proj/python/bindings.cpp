#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tmapprox/closed_form.hpp"
#include "tmapprox/errors.hpp"
#include "tmapprox/extremal.hpp"
#include "tmapprox/kernel_model.hpp"
#include "tmapprox/oracle.hpp"
#include "tmapprox/symmetric_sums.hpp"
#include "tmapprox/tm_basis.hpp"

namespace py = pybind11;
using namespace tmapprox;

namespace {

ChiConvention parse_chi(const std::string& name) {
  if (name == "phased") return ChiConvention::phased;
  if (name == "all_ones") return ChiConvention::all_ones;
  throw PreconditionError("chi convention must be 'phased' or 'all_ones'");
}

QuadratureSpec quad(double rel_tol, double abs_tol, int max_panels) {
  QuadratureSpec q;
  q.rel_tol = rel_tol;
  q.abs_tol = abs_tol;
  q.max_panels = max_panels;
  q.validate();
  return q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Best weighted polynomial approximation of (A + B t)/(t^2 + lambda^2)^(s+1)";

  // PreconditionError / PoleEvaluationError surface as ValueError through their std bases.
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<RankDeficiencyError>(m, "RankDeficiencyError", PyExc_ArithmeticError);
  py::register_exception<IllConditionedError>(m, "IllConditionedError", PyExc_ArithmeticError);

  py::class_<KernelParams>(m, "KernelParams")
      .def(py::init<Complex, Complex, double, int>(), py::arg("A"), py::arg("B"), py::arg("lam"), py::arg("s"))
      .def_property_readonly("A", &KernelParams::A)
      .def_property_readonly("B", &KernelParams::B)
      .def_property_readonly("lam", &KernelParams::lambda)
      .def_property_readonly("s", &KernelParams::s)
      .def("__call__", [](const KernelParams& p, Complex z) { return eval_kernel(p, z); }, py::arg("z"))
      .def("__repr__", [](const KernelParams& p) {
        return "KernelParams(A=" + py::repr(py::cast(p.A())).cast<std::string>() +
               ", B=" + py::repr(py::cast(p.B())).cast<std::string>() + ", lam=" + std::to_string(p.lambda()) +
               ", s=" + std::to_string(p.s()) + ")";
      });

  py::class_<PoleSequence>(m, "PoleSequence")
      .def(py::init<std::vector<Complex>>(), py::arg("points"))
      .def("__len__", &PoleSequence::size)
      .def("__getitem__", [](const PoleSequence& p, int i) {
        if (i < 0) i += static_cast<int>(p.size());
        if (i < 0 || i >= static_cast<int>(p.size())) throw py::index_error();
        return p[i];
      })
      .def("points", [](const PoleSequence& p) { return std::vector<Complex>(p.points().begin(), p.points().end()); })
      .def("prefix", &PoleSequence::prefix, py::arg("n"));

  py::class_<WeightSpec>(m, "WeightSpec")
      .def(py::init<Complex, PoleSequence>(), py::arg("rho0"), py::arg("poles"))
      .def_property_readonly("rho0", &WeightSpec::rho0)
      .def_property_readonly("poles", &WeightSpec::poles);

  m.def("eval_tau", [](Complex z, const std::vector<Complex>& pts) { return eval_tau(z, pts); }, py::arg("z"),
        py::arg("points"));
  m.def("eval_R", &eval_R, py::arg("params"), py::arg("poles"), py::arg("z"));
  m.def("mu_n", &mu_n, py::arg("lam"), py::arg("poles"));

  m.def("chi", [](Complex a, const std::string& c) { return chi(a, parse_chi(c)); }, py::arg("a"),
        py::arg("convention") = "phased");
  m.def(
      "eval_phi",
      [](const PoleSequence& poles, int j, Complex z, const std::string& c) {
        return eval_phi(BasisContext{poles, parse_chi(c)}, j, z);
      },
      py::arg("poles"), py::arg("j"), py::arg("z"), py::arg("convention") = "phased");
  m.def(
      "dzhrbashyan_residual",
      [](const PoleSequence& poles, Complex z, Complex zeta, int mm, const std::string& c) {
        return dzhrbashyan_residual(BasisContext{poles, parse_chi(c)}, z, zeta, mm);
      },
      py::arg("poles"), py::arg("z"), py::arg("zeta"), py::arg("m"), py::arg("convention") = "phased");

  m.def(
      "nu_table",
      [](int max_order, Complex z, const std::vector<Complex>& pts) { return nu_table(max_order, z, pts).values; },
      py::arg("max_order"), py::arg("z"), py::arg("points"));

  m.def(
      "residue_coefficients",
      [](const KernelParams& p, const PoleSequence& poles) {
        const ResidueCoefficients c = residue_coefficients(p, poles);
        py::dict d;
        d["D"] = c.D;
        d["D_lower"] = c.D_lower;
        d["G"] = c.G;
        return d;
      },
      py::arg("params"), py::arg("poles"));
  m.def("error_squared", &error_squared, py::arg("params"), py::arg("weight"));
  m.def("error_squared_general", &error_squared_general, py::arg("params"), py::arg("weight"));
  m.def("best_error_squared", &best_error_squared, py::arg("params"), py::arg("weight"));
  m.def("cross_integral", &cross_integral, py::arg("k"), py::arg("j"), py::arg("lam"));
  m.def(
      "laguerre_identity_gap", [](const std::vector<Complex>& g) { return laguerre_identity_gap(g); }, py::arg("G"));

  m.def(
      "remainder", [](const KernelParams& p, const PoleSequence& poles, Complex z) { return remainder(p, poles, z); },
      py::arg("params"), py::arg("poles"), py::arg("z"));
  m.def(
      "extremal_poly", [](const KernelParams& p, const PoleSequence& poles) { return extremal_poly(p, poles).coeffs; },
      py::arg("params"), py::arg("poles"));
  m.def("partial_sum_R", &partial_sum_R, py::arg("params"), py::arg("poles"), py::arg("z"));

  m.def(
      "integrate_real_line",
      [](const std::function<Complex(double)>& f, double rel_tol, double abs_tol, int max_panels) {
        const QuadratureResult r = integrate_real_line(f, quad(rel_tol, abs_tol, max_panels));
        return py::make_tuple(r.value, r.error_estimate, r.panels);
      },
      py::arg("f"), py::arg("rel_tol") = 1e-12, py::arg("abs_tol") = 1e-14, py::arg("max_panels") = 4096);
  m.def(
      "ls_best_poly",
      [](const KernelParams& p, const WeightSpec& w, double rel_tol) {
        QuadratureSpec q;
        q.rel_tol = rel_tol;
        const LeastSquaresResult r = ls_best_poly(p, w, q);
        py::dict d;
        d["coefficients"] = r.poly.coeffs;
        d["error"] = r.error;
        d["error_squared"] = r.error_squared;
        d["gram_condition"] = r.gram_condition;
        d["quadrature_estimate_error"] = r.quadrature_estimate_error;
        return d;
      },
      py::arg("params"), py::arg("weight"), py::arg("rel_tol") = 1e-12);
}
