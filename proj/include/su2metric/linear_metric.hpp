#ifndef SU2METRIC_LINEAR_METRIC_HPP
#define SU2METRIC_LINEAR_METRIC_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su2metric/spin.hpp"

namespace su2metric {

/// Parameters of the linear-exponent Dyson map
///   eta = exp(2 (i g0 L0 + (l + i g)L+ + (l - i g)L-)).
/// theta^2 = 4(l^2 + g^2) - g0^2 may be negative; all derived scalars are
/// even functions of theta and evaluated through theta^2.
struct LinearMetricParams {
    double lambda = 0;
    double gamma = 0;
    double gamma0 = 0;

    double theta_sq() const {
        return 4.0 * (lambda * lambda + gamma * gamma) - gamma0 * gamma0;
    }
    cxd theta() const;             // principal sqrt of theta_sq
    bool positive() const { return theta_sq() >= 0; }
    bool hermitian_metric() const { return gamma0 == 0; }

    cxd lambda0() const { return {0.0, gamma0}; }
    cxd lambda_plus() const { return {lambda, gamma}; }
    cxd lambda_minus() const { return {lambda, -gamma}; }

    double cosh_theta() const;     // cosh(theta), real (cos for theta^2 < 0)
    double sinhc_theta() const;    // sinh(theta)/theta
    double Y() const;              // tanh(theta)/theta
};

/// Even entire scalars as functions of theta^2 (series below |theta| ~ 1e-4).
double cosh_even(double theta_sq);
double sinhc_even(double theta_sq);
double tanhc_even(double theta_sq);

/// Exponent 2(lambda0 L0 + lambda+ L+ + lambda- L-) as a matrix.
Mat metric_exponent(const LinearMetricParams& m, const SpinRep& rep);

/// Dyson map eta = exp(T) in the given representation.
Mat build_metric(const LinearMetricParams& m, const SpinRep& rep);

/// Adjoint action eta L_i eta^-1 = sum_j b(i,j) L_j on the column (L0, L+, L-).
/// det b = 1.
struct AdjointMatrix3 {
    Eigen::Matrix3cd b;
};
AdjointMatrix3 adjoint_matrix(const LinearMetricParams& m);

/// Gauss-ordered factors: eta = e^{2 k- L-} e^{2 k0 L0} e^{2 k+ L+}.
struct GaussFactors {
    cxd kappa0, kappa_plus, kappa_minus;
};
/// Throws std::domain_error when cosh(theta) + lambda0 sinh(theta)/theta = 0.
GaussFactors gauss_decompose(const LinearMetricParams& m);

/// The three quartic Hermiticity constraints xi^(i)(Y) = 0, i = 1..3,
/// with Y = tanh(theta)/theta.  xi[i][k] multiplies Y^k.
struct ConstraintSystem {
    std::array<std::array<double, 5>, 3> xi{};
    double eval(int i, double Y) const;
    double max_residual(double Y) const;
};
ConstraintSystem constraint_coefficients(const HamiltonianParams& p,
                                         const LinearMetricParams& m);

/// Values of (alpha00, beta_pp) forced by xi^(2)(Y) = xi^(3)(Y) = 0, which are
/// linear in those two couplings.  nullopt when the 2x2 system is singular
/// (the special solution branches of the appendix families live there).
std::optional<std::pair<double, double>> forced_diagonal_couplings(
    const HamiltonianParams& p, const LinearMetricParams& m, double Y);

struct SolveOptions {
    double theta_max = 50.0;          // scan window for bracketing solvers
    int grid_points = 400;            // log-spaced scan density
    double bisection_tol = 1e-13;
    double constraint_tol = 1e-9;
    double oracle_tol = 1e-8;
    int oracle_two_l = 4;             // rep used for conjugation validation
    double conditioning_theta = 20.0; // |theta| beyond this is flagged
};

struct MetricSolution {
    LinearMetricParams metric;
    std::string family;                    // linear | quadratic | gamma-zero | lambda-zero
    std::string branch;                    // "+", "-", "special+", "special-", "trivial"
    double theta = 0;                      // signed root (0 for trivial)
    std::map<std::string, double> forced;  // couplings fixed by the constraints
    double constraint_residual = 0;        // max_i |xi^(i)(Y)|
    double oracle_residual = -1;           // ||h - h^dag|| via conjugation, -1 if skipped
    bool positive = true;                  // theta^2 >= 0
    bool conditioning_warning = false;
};

struct SolveOutcome {
    std::vector<MetricSolution> solutions;
    std::string diagnostic;  // non-empty when empty for a structural reason
};

/// Hamiltonian with the forced couplings of a solution substituted.
HamiltonianParams apply_forced(const HamiltonianParams& p, const MetricSolution& s);

/// Conjugation-oracle Hermiticity residual of a candidate solution,
/// evaluated at the options' representation.
double solution_oracle_residual(const HamiltonianParams& p, const MetricSolution& s,
                                const SolveOptions& opt);

/// Linear subclass (alpha_p0 = beta_p0 = alpha_pp = beta_pp = 0,
/// alpha_pm = alpha00/2): bracketed root finding for the metric scale along a
/// caller-chosen (lambda, gamma, gamma0) direction, both discriminant branches.
/// Empty when |beta0| > 2 sqrt(alpha_p^2 + beta_p^2).
/// Throws std::invalid_argument on a gate violation.
SolveOutcome solve_linear_family(const HamiltonianParams& p,
                                 const LinearMetricParams& direction,
                                 const SolveOptions& opt = {});

/// General quadratic family with gamma0 = 0, gamma = nu lambda:
/// tanh(theta) closed form, theta = 2 lambda sqrt(1+nu^2), both branches,
/// with the forced (alpha00, beta_pp) attached.  nu^2 = 1 is singular.
SolveOutcome solve_quadratic_family(const HamiltonianParams& p, double nu,
                                    const SolveOptions& opt = {});

/// Appendix families with gamma0 != 0: gamma = 0, gamma0 = nu lambda
/// (theta = lambda sqrt(4-nu^2)) and lambda = 0, gamma0 = nu gamma
/// (theta = gamma sqrt(4-nu^2)).  Each returns the quotient branches with
/// forced (alpha00, beta_pp) plus, for sqrt2 < |nu| < 2, the special branches
/// tanh(theta) = +- sqrt(4-nu^2)/nu with forced (alpha_p, alpha_pp, beta_pp).
SolveOutcome solve_gamma_zero_family(const HamiltonianParams& p, double nu,
                                     const SolveOptions& opt = {});
SolveOutcome solve_lambda_zero_family(const HamiltonianParams& p, double nu,
                                      const SolveOptions& opt = {});

}  // namespace su2metric

#endif
