#ifndef SU2METRIC_QUAD_METRIC_HPP
#define SU2METRIC_QUAD_METRIC_HPP

#include <array>
#include <vector>

#include "su2metric/linear_metric.hpp"
#include "su2metric/spin.hpp"

namespace su2metric {

/// Quadratic-exponent Dyson map eta = e^{z- L-^2} e^{z0 L0^2} e^{z+ L+^2}.
/// Symmetry-respecting mode has z+- = z1 +- i z2 with z0, z1, z2 real;
/// the unconstrained mode allows independent complex z+-.
struct QuadMetricParams {
    double zeta0 = 0;
    cxd zeta_plus = 0, zeta_minus = 0;
    bool symmetric_mode = false;

    static QuadMetricParams symmetric(double z0, double z1, double z2) {
        return {z0, {z1, z2}, {z1, -z2}, true};
    }
};

Mat build_quad_metric(const QuadMetricParams& q, const SpinRep& rep);

enum class Generator { L0, Lplus, Lminus };

/// Closed-form adjoint action eta L_i eta^-1 evaluated as a matrix.
Mat quad_adjoint_action(const QuadMetricParams& q, Generator g, const SpinRep& rep);

/// Spin-1 Hermiticity constraints for the quadratic metric.  Given (zeta0,
/// zeta_plus) with |zeta_plus| <= 1/sqrt(2), fixes zeta_minus and the couplings
/// (beta0, beta_p, alpha_p) from (beta_pp, beta_p0, alpha_p0); the diagonal
/// couplings alpha00, alpha_pm, alpha_pp stay free.  Valid only at l = 1.
struct QuadConstraintSolution {
    QuadMetricParams metric;
    double beta0 = 0, beta_p = 0, alpha_p = 0;  // forced values
};

/// zeta_minus from zeta_plus, in the form -z+/(1 + sqrt(2 - 4 z+^2)) which is
/// regular on the whole admissible interval including z+ = +-1/2.
double quadconst_zeta_minus(double zeta_plus);

/// Throws std::domain_error for |zeta_plus| > 1/sqrt(2) or a singular
/// denominator in the forced couplings.
QuadConstraintSolution solve_quad_constraints_spin1(double zeta0, double zeta_plus,
                                                    const HamiltonianParams& p);

/// Hamiltonian of the closing example at l = 1 and its spectrum:
/// analytic {12, 7 +- sqrt(81 b0^2 + 64(431 - 160 sqrt 7))/(16 - 5 sqrt 7)}
/// versus dense diagonalization.
struct Figure4Eigenvalues {
    std::array<cxd, 3> analytic;
    std::array<cxd, 3> numeric;
    double max_difference = 0;
    bool all_real = false;
};
HamiltonianParams figure4_hamiltonian(double beta0);
Figure4Eigenvalues figure4_eigenvalues(double beta0);

}  // namespace su2metric

#endif
