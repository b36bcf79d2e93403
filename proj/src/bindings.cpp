#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "su2metric/bogoliubov.hpp"
#include "su2metric/counterpart.hpp"
#include "su2metric/figures.hpp"
#include "su2metric/quad_metric.hpp"
#include "su2metric/spectra.hpp"

namespace py = pybind11;
using namespace su2metric;

PYBIND11_MODULE(_su2metric, m) {
    m.doc() = "metric operators for non-Hermitian quadratic su(2) Hamiltonians";

    py::class_<SpinRep>(m, "SpinRep")
        .def_readonly("two_l", &SpinRep::two_l)
        .def_readonly("L0", &SpinRep::L0)
        .def_readonly("Lp", &SpinRep::Lp)
        .def_readonly("Lm", &SpinRep::Lm)
        .def_readonly("Lx", &SpinRep::Lx)
        .def_readonly("Ly", &SpinRep::Ly)
        .def_readonly("Lz", &SpinRep::Lz)
        .def_property_readonly("dim", &SpinRep::dim)
        .def_property_readonly("l", &SpinRep::l);
    m.def("build_spin_rep", &build_spin_rep, py::arg("two_l"));

    py::class_<HamiltonianParams>(m, "HamiltonianParams")
        .def(py::init<>())
        .def_readwrite("beta0", &HamiltonianParams::beta0)
        .def_readwrite("alpha_p", &HamiltonianParams::alpha_p)
        .def_readwrite("beta_p", &HamiltonianParams::beta_p)
        .def_readwrite("alpha00", &HamiltonianParams::alpha00)
        .def_readwrite("alpha_p0", &HamiltonianParams::alpha_p0)
        .def_readwrite("beta_p0", &HamiltonianParams::beta_p0)
        .def_readwrite("alpha_pp", &HamiltonianParams::alpha_pp)
        .def_readwrite("beta_pp", &HamiltonianParams::beta_pp)
        .def_readwrite("alpha_pm", &HamiltonianParams::alpha_pm);

    py::class_<SigmaParams>(m, "SigmaParams")
        .def(py::init<>())
        .def_readwrite("sx", &SigmaParams::sx)
        .def_readwrite("sy", &SigmaParams::sy)
        .def_readwrite("sz", &SigmaParams::sz)
        .def_readwrite("sxx", &SigmaParams::sxx)
        .def_readwrite("syy", &SigmaParams::syy)
        .def_readwrite("szz", &SigmaParams::szz)
        .def_readwrite("sxy", &SigmaParams::sxy)
        .def_readwrite("sxz", &SigmaParams::sxz)
        .def_readwrite("syz", &SigmaParams::syz);

    m.def("to_sigma", &to_sigma);
    m.def("from_sigma", &from_sigma);
    m.def("build_hamiltonian", &build_hamiltonian);
    m.def("build_hamiltonian_sigma", &build_hamiltonian_sigma);
    m.def("check_antilinear_symmetry",
          [](const Mat& H, const SpinRep& rep, double tol) {
              const auto r = check_antilinear_symmetry(H, rep, tol);
              return py::make_tuple(r.ok, r.residual);
          },
          py::arg("H"), py::arg("rep"), py::arg("tol") = 1e-12);
    m.def("check_casimir_commutes",
          [](const Mat& H, const SpinRep& rep, double tol) {
              const auto r = check_casimir_commutes(H, rep, tol);
              return py::make_tuple(r.ok, r.residual);
          },
          py::arg("H"), py::arg("rep"), py::arg("tol") = 1e-12);

    py::class_<LinearMetricParams>(m, "LinearMetricParams")
        .def(py::init<>())
        .def(py::init([](double l, double g, double g0) {
                 return LinearMetricParams{l, g, g0};
             }),
             py::arg("lambda_"), py::arg("gamma"), py::arg("gamma0"))
        .def_readwrite("lambda_", &LinearMetricParams::lambda)
        .def_readwrite("gamma", &LinearMetricParams::gamma)
        .def_readwrite("gamma0", &LinearMetricParams::gamma0)
        .def_property_readonly("theta_sq", &LinearMetricParams::theta_sq)
        .def_property_readonly("Y", &LinearMetricParams::Y)
        .def_property_readonly("positive", &LinearMetricParams::positive)
        .def_property_readonly("hermitian_metric", &LinearMetricParams::hermitian_metric);

    m.def("adjoint_matrix",
          [](const LinearMetricParams& mm) { return Eigen::MatrixXcd(adjoint_matrix(mm).b); });
    m.def("gauss_decompose", [](const LinearMetricParams& mm) {
        const auto g = gauss_decompose(mm);
        return py::make_tuple(g.kappa0, g.kappa_plus, g.kappa_minus);
    });
    m.def("build_metric", &build_metric);
    m.def("constraint_coefficients", [](const HamiltonianParams& p, const LinearMetricParams& mm) {
        const auto c = constraint_coefficients(p, mm);
        return c.xi;
    });

    py::class_<MetricSolution>(m, "MetricSolution")
        .def_readonly("metric", &MetricSolution::metric)
        .def_readonly("family", &MetricSolution::family)
        .def_readonly("branch", &MetricSolution::branch)
        .def_readonly("theta", &MetricSolution::theta)
        .def_readonly("forced", &MetricSolution::forced)
        .def_readonly("constraint_residual", &MetricSolution::constraint_residual)
        .def_readonly("oracle_residual", &MetricSolution::oracle_residual)
        .def_readonly("positive", &MetricSolution::positive)
        .def_readonly("conditioning_warning", &MetricSolution::conditioning_warning);

    py::class_<SolveOutcome>(m, "SolveOutcome")
        .def_readonly("solutions", &SolveOutcome::solutions)
        .def_readonly("diagnostic", &SolveOutcome::diagnostic);

    m.def("solve_linear_family",
          [](const HamiltonianParams& p, const LinearMetricParams& dir) {
              return solve_linear_family(p, dir);
          });
    m.def("solve_quadratic_family",
          [](const HamiltonianParams& p, double nu) { return solve_quadratic_family(p, nu); });
    m.def("solve_gamma_zero_family",
          [](const HamiltonianParams& p, double nu) { return solve_gamma_zero_family(p, nu); });
    m.def("solve_lambda_zero_family",
          [](const HamiltonianParams& p, double nu) { return solve_lambda_zero_family(p, nu); });
    m.def("apply_forced", &apply_forced);

    py::class_<CounterpartCoeffs>(m, "CounterpartCoeffs")
        .def_readonly("a_p", &CounterpartCoeffs::a_p)
        .def_readonly("b_p", &CounterpartCoeffs::b_p)
        .def_readonly("a00", &CounterpartCoeffs::a00)
        .def_readonly("a_pm", &CounterpartCoeffs::a_pm)
        .def_readonly("a_pp", &CounterpartCoeffs::a_pp)
        .def_readonly("b_pp", &CounterpartCoeffs::b_pp)
        .def_readonly("a_0p", &CounterpartCoeffs::a_0p)
        .def_readonly("b_0p", &CounterpartCoeffs::b_0p)
        .def_readonly("a_p0", &CounterpartCoeffs::a_p0)
        .def_readonly("b_p0", &CounterpartCoeffs::b_p0);
    m.def("counterpart_coeffs", &counterpart_coeffs);
    m.def("assemble_counterpart", &assemble_counterpart);
    m.def("conjugation_oracle",
          [](const Mat& H, const LinearMetricParams& mm, const SpinRep& rep) {
              return conjugation_oracle(H, mm, rep).h;
          });
    m.def("verify_pseudo_quasi_hermiticity",
          [](const Mat& H, const LinearMetricParams& mm, const SpinRep& rep, double tol) {
              const auto r = verify_pseudo_quasi_hermiticity(H, mm, rep, tol);
              py::dict d;
              d["rho_hermiticity_residual"] = r.rho_hermiticity_residual;
              d["rho_min_eigenvalue"] = r.rho_min_eigenvalue;
              d["intertwining_residual"] = r.intertwining_residual;
              d["pass"] = r.pass;
              return d;
          },
          py::arg("H"), py::arg("metric"), py::arg("rep"), py::arg("tol") = 1e-8);

    py::class_<QuadMetricParams>(m, "QuadMetricParams")
        .def(py::init<>())
        .def_readwrite("zeta0", &QuadMetricParams::zeta0)
        .def_readwrite("zeta_plus", &QuadMetricParams::zeta_plus)
        .def_readwrite("zeta_minus", &QuadMetricParams::zeta_minus)
        .def_static("symmetric", &QuadMetricParams::symmetric);
    m.def("build_quad_metric", &build_quad_metric);
    m.def("quadconst_zeta_minus", &quadconst_zeta_minus);
    m.def("solve_quad_constraints_spin1",
          [](double z0, double zp, const HamiltonianParams& p) {
              const auto s = solve_quad_constraints_spin1(z0, zp, p);
              py::dict d;
              d["zeta_minus"] = s.metric.zeta_minus.real();
              d["beta0"] = s.beta0;
              d["beta_p"] = s.beta_p;
              d["alpha_p"] = s.alpha_p;
              return d;
          });
    m.def("figure4_eigenvalues", [](double b0) {
        const auto r = figure4_eigenvalues(b0);
        py::dict d;
        d["analytic"] = r.analytic;
        d["numeric"] = r.numeric;
        d["max_difference"] = r.max_difference;
        d["all_real"] = r.all_real;
        return d;
    });

    m.def("eigenvalues", [](const Mat& M) {
        const auto r = eigenvalues(M);
        py::dict d;
        d["eigenvalues"] = r.eigenvalues;
        d["max_imag_abs"] = r.max_imag_abs;
        d["is_real"] = r.is_real;
        d["conjugate_paired"] = r.conjugate_paired;
        return d;
    });
    m.def("compare_spectra", [](const Mat& A, const Mat& B, double tol) {
        const auto r = compare_spectra(A, B, tol);
        return py::make_tuple(r.matched, r.max_pair_distance);
    }, py::arg("A"), py::arg("B"), py::arg("tol") = 1e-8);

    m.def("bogoliubov_from_metric", [](const LinearMetricParams& mm) {
        const auto b = bogoliubov_from_metric(mm);
        py::dict d;
        d["alpha"] = b.alpha;
        d["beta"] = b.beta;
        d["gamma"] = b.gamma;
        d["delta"] = b.delta;
        d["unimodularity"] = b.unimodularity();
        return d;
    });
    m.def("diagonalization_condition",
          [](const HamiltonianParams& p, const LinearMetricParams& mm) {
              const auto r = diagonalization_condition(p, mm);
              py::dict d;
              d["residual"] = r.residual;
              d["pole"] = r.pole;
              d["indeterminate"] = r.indeterminate;
              return d;
          });
}
