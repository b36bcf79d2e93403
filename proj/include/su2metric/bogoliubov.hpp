#ifndef SU2METRIC_BOGOLIUBOV_HPP
#define SU2METRIC_BOGOLIUBOV_HPP

#include "su2metric/linear_metric.hpp"

namespace su2metric {

/// Generalized Bogoliubov view of the linear-exponent transformation:
/// alpha = 2 lambda+ sinh(theta)/theta, beta = cosh + lambda0 sinh/theta,
/// delta = 2 lambda- sinh/theta, gamma = cosh - lambda0 sinh/theta,
/// with beta gamma - alpha delta = 1.
struct BogoliubovParams {
    cxd alpha, beta, gamma, delta;
    cxd unimodularity() const { return beta * gamma - alpha * delta; }
};

BogoliubovParams bogoliubov_from_metric(const LinearMetricParams& m);

/// The same adjoint matrix in Bogoliubov form,
/// rows (L0, L+, L-) -> [[gb+da, -ab, gd], [-2db, b^2, -d^2], [2ga, -a^2, g^2]].
Eigen::Matrix3cd bogoliubov_matrix(const BogoliubovParams& b);

/// gamma0 tanh(theta)/theta - (ap l + bp g)/(ap g - bp l); zero means the
/// metric also diagonalizes the linear Hamiltonian.  Both sign conventions of
/// the quotient are accepted (the smaller residual is reported).
struct DiagonalizationCondition {
    double residual = 0;
    bool pole = false;           // ap g = bp l
    bool indeterminate = false;  // 0/0 (e.g. zero metric with beta0 = 0)
};
DiagonalizationCondition diagonalization_condition(const HamiltonianParams& p,
                                                   const LinearMetricParams& m);

/// Metric that diagonalizes the linear Hamiltonian (broken regime
/// |beta0| > 2 sqrt(ap^2 + bp^2) required): gamma0 = 0, direction
/// ap lambda + bp gamma = 0, scale from tanh(theta) = (b0 - sqrt(b0^2 -
/// 4S^2))/(2S), the analytic continuation of the similarity constraint.
/// Returns nullopt in the unbroken regime.
std::optional<LinearMetricParams> diagonalizing_metric(const HamiltonianParams& p);

/// Max off-diagonal absolute entry.
double offdiagonal_mass(const Mat& M);

}  // namespace su2metric

#endif
