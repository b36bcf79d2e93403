#ifndef SU2METRIC_EXPM_HPP
#define SU2METRIC_EXPM_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <Eigen/Dense>

namespace su2metric {

/// Matrix exponential by Taylor series with scaling and squaring.
/// Order adapts to the scaled norm; fine for the small dense matrices here.
template <typename MatT>
MatT expm(const MatT& A) {
    using Real = typename MatT::RealScalar;
    const Eigen::Index n = A.rows();
    Real nrm = A.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    if (nrm > Real(0.5)) {
        s = static_cast<int>(std::ceil(std::log2(static_cast<double>(nrm) / 0.5)));
    }
    MatT As = A / std::pow(Real(2), Real(s));
    MatT sum = MatT::Identity(n, n);
    MatT term = MatT::Identity(n, n);
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (int k = 1; k <= 64; ++k) {
        term = (term * As) / Real(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < eps * sum.cwiseAbs().maxCoeff()) break;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

using MatL = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

inline MatL to_long(const Eigen::MatrixXcd& A) {
    return A.cast<std::complex<long double>>();
}

inline Eigen::MatrixXcd to_double(const MatL& A) {
    return A.cast<std::complex<double>>();
}

}  // namespace su2metric

#endif
