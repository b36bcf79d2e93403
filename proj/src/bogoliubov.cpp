#include "su2metric/bogoliubov.hpp"

#include <cmath>

namespace su2metric {

BogoliubovParams bogoliubov_from_metric(const LinearMetricParams& m) {
    const double c = m.cosh_theta(), s = m.sinhc_theta();
    BogoliubovParams b;
    b.alpha = 2.0 * m.lambda_plus() * s;
    b.beta = c + m.lambda0() * s;
    b.delta = 2.0 * m.lambda_minus() * s;
    b.gamma = c - m.lambda0() * s;
    return b;
}

Eigen::Matrix3cd bogoliubov_matrix(const BogoliubovParams& p) {
    Eigen::Matrix3cd M;
    M << p.gamma * p.beta + p.delta * p.alpha, -p.alpha * p.beta, p.gamma * p.delta,
        -2.0 * p.delta * p.beta, p.beta * p.beta, -p.delta * p.delta,
        2.0 * p.gamma * p.alpha, -p.alpha * p.alpha, p.gamma * p.gamma;
    return M;
}

DiagonalizationCondition diagonalization_condition(const HamiltonianParams& p,
                                                   const LinearMetricParams& m) {
    DiagonalizationCondition r;
    const double num = p.alpha_p * m.lambda + p.beta_p * m.gamma;
    const double den = p.alpha_p * m.gamma - p.beta_p * m.lambda;
    const double lhs = m.gamma0 * m.Y();
    if (num == 0 && den == 0) {
        r.indeterminate = true;
        return r;
    }
    if (den == 0) {
        r.pole = true;
        r.residual = std::abs(lhs) > 0 ? std::abs(num / lhs) : std::abs(num);
        return r;
    }
    const double q = num / den;
    r.residual = std::min(std::abs(lhs - q), std::abs(lhs + q));
    return r;
}

std::optional<LinearMetricParams> diagonalizing_metric(const HamiltonianParams& p) {
    const double S2 = p.alpha_p * p.alpha_p + p.beta_p * p.beta_p;
    const double S = std::sqrt(S2);
    if (S == 0 || p.beta0 * p.beta0 <= 4 * S2) return std::nullopt;  // unbroken
    const double b0 = std::abs(p.beta0);
    const double t = (b0 - std::sqrt(b0 * b0 - 4 * S2)) / (2 * S);  // tanh(theta)
    const double theta = std::atanh(t) * (p.beta0 > 0 ? 1.0 : -1.0);
    // direction alpha_p lambda + beta_p gamma = 0 with 2 sqrt(l^2+g^2) = theta
    double lambda, gamma;
    if (p.beta_p != 0) {
        lambda = theta * p.beta_p / (2 * S);
        gamma = -p.alpha_p * lambda / p.beta_p;
    } else {
        lambda = 0;
        gamma = theta / 2;
    }
    return LinearMetricParams{lambda, gamma, 0.0};
}

double offdiagonal_mass(const Mat& M) {
    double mx = 0;
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            if (i != j) mx = std::max(mx, std::abs(M(i, j)));
    return mx;
}

}  // namespace su2metric
