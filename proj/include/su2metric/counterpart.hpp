#ifndef SU2METRIC_COUNTERPART_HPP
#define SU2METRIC_COUNTERPART_HPP

#include "su2metric/linear_metric.hpp"
#include "su2metric/spin.hpp"

namespace su2metric {

/// Closed-form coefficients of the transformed Hamiltonian h = eta H eta^-1,
/// already carrying their cosh^2/cosh^4 scale factors.  On the constraint
/// manifold the assembled matrix equals the conjugation exactly; off the
/// manifold the cross sums (a0p + ap0, b0p + bp0) are the Hermiticity
/// residuals and the assembly is the Hermitian part of the display.
struct CounterpartCoeffs {
    double a_p = 0, b_p = 0;          // cosh^2-scaled linear pieces
    double a00 = 0, a_pm = 0;         // diagonal quadratic pieces
    double a_pp = 0, b_pp = 0;        // L+-^2 pieces
    double a_0p = 0, b_0p = 0;        // quadratic spill into the linear slot
    double a_p0 = 0, b_p0 = 0;        // cross-term partners
    double cosh_sq = 1;               // cosh^2(theta), for reference
};

CounterpartCoeffs counterpart_coeffs(const HamiltonianParams& p,
                                     const LinearMetricParams& m);

/// h assembled line by line; each line is Hermitian for real coefficients.
Mat assemble_counterpart(const CounterpartCoeffs& c, const SpinRep& rep);

/// eta H eta^-1 by matrix exponential (long-double internals) and a linear
/// solve instead of an explicit inverse.
struct ConjugationResult {
    Mat h;
    bool conditioning_warning = false;  // ||eta|| ||eta^-1|| > 1e12
};
ConjugationResult conjugation_oracle(const Mat& H, const LinearMetricParams& m,
                                     const SpinRep& rep);

struct MetricOperator {
    Mat eta, eta_inv, rho;  // rho = eta^dag eta
};
MetricOperator make_metric_operator(const LinearMetricParams& m, const SpinRep& rep);

struct PseudoQuasiReport {
    double rho_hermiticity_residual = 0;
    double rho_min_eigenvalue = 0;
    double intertwining_residual = 0;  // ||H^dag rho - rho H||_max
    bool rho_hermitian = false;
    bool rho_positive_definite = false;
    bool intertwines = false;
    bool pass = false;  // all three at tol
};
PseudoQuasiReport verify_pseudo_quasi_hermiticity(const Mat& H,
                                                  const LinearMetricParams& m,
                                                  const SpinRep& rep,
                                                  double tol = 1e-8);

}  // namespace su2metric

#endif
