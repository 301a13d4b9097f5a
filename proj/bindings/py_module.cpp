#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "ghx/errors.hpp"
#include "ghx/garding.hpp"
#include "ghx/herm.hpp"
#include "ghx/hodge.hpp"
#include "ghx/rng.hpp"
#include "ghx/sampling.hpp"
#include "ghx/sympoly.hpp"

namespace py = pybind11;
using ghx::Complex;
using ghx::HermitianForm;
using ghx::MetricPencil;

namespace {

HermitianForm form_from_array(const py::array_t<Complex>& arr, double tol) {
  const auto buf = arr.unchecked<2>();
  if (buf.shape(0) != buf.shape(1)) throw ghx::ContractViolation("matrix must be square");
  const int n = int(buf.shape(0));
  Eigen::MatrixXcd M(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) M(j, k) = buf(j, k);
  return HermitianForm::from_matrix(M, tol);
}

py::array_t<Complex> form_to_array(const HermitianForm& A) {
  const Eigen::MatrixXcd M = A.matrix();
  py::array_t<Complex> out({A.dim(), A.dim()});
  auto buf = out.mutable_unchecked<2>();
  for (int j = 0; j < A.dim(); ++j)
    for (int k = 0; k < A.dim(); ++k) buf(j, k) = M(j, k);
  return out;
}

std::vector<HermitianForm> forms_of(const std::vector<py::array_t<Complex>>& arrs) {
  std::vector<HermitianForm> out;
  out.reserve(arrs.size());
  for (const auto& a : arrs) out.push_back(form_from_array(a, 1e-12));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "sigma_m cones, Garding inequalities and the mixed Hodge-index theorem";

  // Translators run in reverse registration order; bases go first so the
  // derived types keep their own python classes.
  py::register_exception<ghx::Error>(mod, "GhxError", PyExc_RuntimeError);
  py::register_exception<ghx::PreconditionError>(mod, "GhxPreconditionError",
                                                 PyExc_ValueError);
  py::register_exception<ghx::ParseError>(mod, "GhxParseError", PyExc_ValueError);

  py::class_<HermitianForm>(mod, "HermitianForm")
      .def(py::init([](const py::array_t<Complex>& arr, double tol) {
             return form_from_array(arr, tol);
           }),
           py::arg("matrix"), py::arg("tol") = 1e-12)
      .def_property_readonly("n", &HermitianForm::dim)
      .def("to_numpy", &form_to_array)
      .def("trace", &HermitianForm::trace)
      .def("frobenius_norm", &HermitianForm::frobenius_norm)
      .def_static("identity", &HermitianForm::identity, py::arg("n"))
      .def_static("diagonal", &HermitianForm::diagonal, py::arg("values"));

  py::class_<MetricPencil>(mod, "MetricPencil")
      .def(py::init([](const py::array_t<Complex>& arr) {
             return MetricPencil(form_from_array(arr, 1e-12));
           }),
           py::arg("matrix"))
      .def_property_readonly("n", &MetricPencil::dim)
      .def_property_readonly("condition", &MetricPencil::condition)
      .def("form", &MetricPencil::form)
      .def_static("standard", &MetricPencil::standard, py::arg("n"));

  mod.def(
      "pencil_eigenvalues",
      [](const HermitianForm& A, const MetricPencil& G) { return pencil_eigenvalues(A, G); },
      py::arg("a"), py::arg("metric"));
  mod.def(
      "inner", [](const HermitianForm& A, const HermitianForm& B) { return inner(A, B); },
      py::arg("a"), py::arg("b"));
  mod.def(
      "proportionality",
      [](const HermitianForm& A, const HermitianForm& B, double tol) {
        return proportionality(A, B, tol);
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

  mod.def("sigma", &ghx::sigma, py::arg("a"), py::arg("metric"), py::arg("k"));
  mod.def(
      "mixed_sigma",
      [](const std::vector<py::array_t<Complex>>& args, const MetricPencil& G) {
        return ghx::mixed_sigma(forms_of(args), G);
      },
      py::arg("args"), py::arg("metric"));
  mod.def(
      "mixed_sigma_oracle",
      [](const std::vector<py::array_t<Complex>>& args, const MetricPencil& G) {
        return ghx::mixed_sigma_oracle(forms_of(args), G);
      },
      py::arg("args"), py::arg("metric"));

  mod.def(
      "in_gamma_m",
      [](const HermitianForm& A, const MetricPencil& G, int m, double tol) {
        const auto r = ghx::in_gamma_m(A, G, m, tol);
        return py::make_tuple(r.member, r.sigmas, r.margins);
      },
      py::arg("a"), py::arg("metric"), py::arg("m"), py::arg("tol") = ghx::kDefaultTol,
      "Returns (member, sigmas, margins).");

  mod.def(
      "garding_gap",
      [](const std::vector<py::array_t<Complex>>& args, const MetricPencil& G, double tol) {
        const auto r = ghx::garding_gap(forms_of(args), G, tol);
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["gap"] = r.gap;
        d["equality"] = r.equality;
        d["pairwise"] = r.pairwise;
        return d;
      },
      py::arg("args"), py::arg("metric"), py::arg("tol") = ghx::kDefaultTol);

  mod.def(
      "positive_representer",
      [](const std::vector<py::array_t<Complex>>& slots, const MetricPencil& G, double tol) {
        const auto r = ghx::positive_representer(forms_of(slots), G, tol);
        return py::make_tuple(form_to_array(r.H), r.min_pencil_eig);
      },
      py::arg("slots"), py::arg("metric"), py::arg("tol") = ghx::kDefaultTol,
      "Returns (H, min_pencil_eig).");

  mod.def(
      "log_concavity",
      [](const py::array_t<Complex>& alpha, const py::array_t<Complex>& beta,
         const MetricPencil& G, int m, double tol) {
        const auto r = ghx::log_concavity(form_from_array(alpha, 1e-12),
                                          form_from_array(beta, 1e-12), G, m, tol);
        py::dict d;
        d["a"] = r.a;
        d["ok"] = r.ok;
        d["equality"] = r.equality;
        d["proportional_c"] = r.proportional_c;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("metric"), py::arg("m"),
      py::arg("tol") = ghx::kDefaultTol);

  mod.def(
      "verify_theorem_a",
      [](const std::vector<py::array_t<Complex>>& alphas, const MetricPencil& G, double tol) {
        const auto r = ghx::verify_theorem_a(forms_of(alphas), G, std::nullopt, tol);
        py::dict d;
        d["signature"] = py::make_tuple(r.quadratic.signature.n_plus,
                                        r.quadratic.signature.n_zero,
                                        r.quadratic.signature.n_minus);
        d["indeterminate"] = r.quadratic.signature.indeterminate;
        d["restricted_spectrum"] = r.restricted_spectrum;
        d["q_alpha"] = r.q_alpha;
        d["decomposition_constant"] = r.decomposition_constant;
        d["decomposition_residual"] = r.decomposition_residual;
        d["min_abs_eig"] = r.min_abs_eig;
        d["hyperbolic"] = r.hyperbolic;
        d["primitive_negative"] = r.primitive_negative;
        d["decomposition_ok"] = r.decomposition_ok;
        d["nonsingular"] = r.nonsingular;
        return d;
      },
      py::arg("alphas"), py::arg("metric"), py::arg("tol") = ghx::kDefaultTol);

  mod.def(
      "corollary_hodge_index",
      [](const py::array_t<Complex>& alpha, const py::array_t<Complex>& beta,
         const MetricPencil& G, int m, double tol) {
        const auto r = ghx::corollary_hodge_index(form_from_array(alpha, 1e-12),
                                                  form_from_array(beta, 1e-12), G, m, tol);
        py::dict d;
        d["pairing"] = r.pairing;
        d["q_value"] = r.q_value;
        d["sigma_m"] = r.sigma_m;
        d["inequality_ok"] = r.inequality_ok;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("metric"), py::arg("m"),
      py::arg("tol") = ghx::kDefaultTol);

  mod.def(
      "sample_gamma_m",
      [](const MetricPencil& G, int m, std::uint64_t seed) {
        ghx::CounterRng rng(seed);
        return form_to_array(ghx::sample_gamma_m(G, m, rng));
      },
      py::arg("metric"), py::arg("m"), py::arg("seed"));
}
