#include "su2metric/counterpart.hpp"

#include <cmath>

#include "su2metric/expm.hpp"

namespace su2metric {

CounterpartCoeffs counterpart_coeffs(const HamiltonianParams& p,
                                     const LinearMetricParams& m) {
    const double b0 = p.beta0, aP = p.alpha_p, bP = p.beta_p, a00 = p.alpha00,
                 aP0 = p.alpha_p0, bP0 = p.beta_p0, aPP = p.alpha_pp,
                 bPP = p.beta_pp, aPM = p.alpha_pm;
    const double L = m.lambda, G = m.gamma, G0 = m.gamma0;
    const double Y = m.Y();
    const double LG = G * G + L * L;
    const double K = Y * Y * (4 * LG + G0 * G0) + 1;
    const double Y2 = Y * Y, Y3 = Y2 * Y, Y4 = Y2 * Y2;
    const double G02 = G0 * G0, G03 = G02 * G0, G04 = G02 * G02;

    const double Abar_p = aP * (1 - Y2 * (-4 * G * G + G02 + 4 * L * L)) +
                          2 * Y * (b0 * (G + G0 * L * Y) - bP * (G0 + 4 * G * L * Y));
    const double Bbar_p = bP * (Y2 * (-4 * G * G - G02 + 4 * L * L) + 1) -
                          2 * L * Y * (b0 + 4 * aP * G * Y) +
                          2 * G0 * Y * (aP + b0 * G * Y);

    const double Abar_00 =
        a00 * K * K -
        8 * Y *
            (G * bP0 +
             G0 * Y3 *
                 (4 * G0 * (G * G * (aPM - aPP) + L * L * (aPM + aPP) + 2 * G * L * bPP) -
                  L * (4 * LG + G02) * bP0) +
             Y * (-G0 * L * bP0 + 4 * LG * aPM + 4 * G * G * aPP - 4 * L * L * aPP -
                  8 * G * L * bPP) +
             Y2 * (G * (4 * LG + G02) * bP0 +
                   8 * G0 * ((L - G) * (G + L) * bPP - 2 * G * L * aPP)) +
             aP0 * (L + G * G0 * Y) * K);

    const double Abar_pm =
        2 * Y *
            (Y * (G * G0 * (aP0 * (4 * Y2 * LG + 1) - 16 * L * Y * aPP) +
                  G02 * Y * (L * (aP0 - 2 * L * Y * a00 + 4 * L * Y * aPP) -
                             2 * G * G * Y * (a00 + 2 * aPP)) -
                  2 * G * G * (a00 - 2 * (L * Y * aP0 + aPP)) + G * G03 * Y2 * aP0 -
                  8 * bPP * (L + G * G0 * Y) * (G - G0 * L * Y)) +
             bP0 * (G - G0 * L * Y) * K) +
        2 * L * Y * (aP0 + 4 * L * L * Y2 * aP0 - 2 * L * Y * (a00 + 2 * aPP)) +
        aPM * (Y4 * (16 * LG * LG + G04) + 2 * G02 * Y2 + 1);

    const double G4L4 = G * G * G * G - 6 * G * G * L * L + L * L * L * L;
    const double Abar_pp =
        aPP * (Y4 * (16 * G4L4 + G04) - 6 * G02 * Y2 + 1) -
        2 * Y *
            (-G * bP0 +
             Y3 * (G0 * (L * (-12 * G * G + G02 + 4 * L * L) * bP0 +
                         2 * G0 * (L - G) * (G + L) * (a00 - 2 * aPM)) +
                   32 * G * L * (G * G - L * L) * bPP) +
             Y2 * (G * (-4 * G * G + 3 * G02 + 12 * L * L) * bP0 +
                   8 * G * G0 * L * (a00 - 2 * aPM) - 2 * G03 * bPP) +
             aP0 * (-12 * G * G0 * L * L * Y3 + L * (1 - 3 * (4 * G * G + G02) * Y2) +
                    G * G0 * Y * ((4 * G * G + G02) * Y2 - 3) + 4 * L * L * L * Y2) -
             3 * G0 * L * Y * bP0 - 2 * Y * (L - G) * (G + L) * (a00 - 2 * aPM) +
             2 * G0 * bPP);

    const double Bbar_pp =
        2 * Y *
            (G0 * (Y * (3 * G * bP0 + L * aP0 * (-4 * Y2 * (L * L - 3 * G * G) - 3) +
                        4 * G * Y2 * (G * G - 3 * L * L) * bP0 +
                        4 * Y * (L - G) * (G + L) * (a00 - 2 * aPM)) +
                   2 * aPP) +
             G * (4 * L * Y * (a00 + Y * (8 * Y * (L - G) * (G + L) * aPP - 3 * G * bP0) -
                               2 * aPM) +
                  aP0 * (4 * Y2 * (G * G - 3 * L * L) - 1)) +
             G02 * Y2 * (3 * L * bP0 + G * (3 * aP0 - 4 * L * Y * (a00 - 2 * aPM))) +
             G03 * Y2 * (L * Y * aP0 - G * Y * bP0 - 2 * aPP)) +
        8 * L * L * L * Y3 * bP0 - 2 * L * Y * bP0 +
        bPP * (Y4 * (G04 - 16 * G4L4) - 6 * G02 * Y2 + 1);

    const double Abar_0p =
        2 * Y *
        (2 * (Y * (G0 * (L * bPP * (4 * Y2 * (L * L - 3 * G * G) + 3) -
                         4 * Y * LG * bP0) +
                   4 * (L * L * aP0 + G * L * (bP0 - 3 * L * Y * bPP) +
                        G * G * G * Y * bPP) +
                   G * G02 * Y * (-4 * G * Y * aP0 + 4 * L * Y * bP0 + 3 * bPP) -
                   G03 * L * Y2 * bPP) +
              aPM * (L - G * G0 * Y) * K - G * bPP +
              aPP * (-12 * G * G0 * L * L * Y3 + L * (3 * (4 * G * G + G02) * Y2 - 1) +
                     G * G0 * Y * ((4 * G * G + G02) * Y2 - 3) - 4 * L * L * L * Y2)) +
         a00 * (G * G0 * Y - L) * K);

    const double Bbar_0p =
        -2 * Y *
        (-2 * (4 * Y * (G + G0 * L * Y) * (aP0 * (L + G * G0 * Y) + bP0 * (G - G0 * L * Y)) +
               aPM * (G + G0 * L * Y) * K +
               aPP * (-12 * G * G * G0 * L * Y3 + 4 * G * G * G * Y2 +
                      G0 * L * Y * (Y2 * (G02 + 4 * L * L) - 3) +
                      G * (1 - 3 * Y2 * (G02 + 4 * L * L)))) +
         a00 * (G + G0 * L * Y) * K +
         bPP * (-24 * G * G0 * L * L * Y3 + L * (6 * (4 * G * G - G02) * Y2 + 2) +
                2 * G * G0 * Y * ((4 * G * G - G02) * Y2 + 3) - 8 * L * L * L * Y2));

    const double Abar_p0 =
        2 * Y *
            (-G0 * bP0 +
             Y3 * (4 * G * L * (4 * LG + G02) * bP0 +
                   4 * G0 * (G * G * G * (a00 - 2 * aPM + 2 * aPP) +
                             G * L * L * (a00 - 2 * aPM - 6 * aPP) -
                             6 * G * G * L * bPP + 2 * L * L * L * bPP) +
                   G03 * (G * (a00 - 2 * aPM + 2 * aPP) - 2 * L * bPP)) -
             Y2 * (4 * G0 * LG * bP0 + G03 * bP0 +
                   4 * (G * G * L * (a00 - 2 * (aPM + 3 * aPP)) +
                        L * L * L * (a00 - 2 * aPM + 2 * aPP) - 2 * G * G * G * bPP +
                        6 * G * L * L * bPP) +
                   G02 * (L * (a00 - 2 * (aPM + 3 * aPP)) - 6 * G * bPP)) +
             4 * G * L * Y * bP0 + G0 * Y * (G * (a00 - 2 * aPM - 6 * aPP) + 6 * L * bPP) -
             2 * G * bPP) +
        aP0 * (Y4 * (16 * L * L * L * L -
                     (4 * G * G + G02) * (4 * G * G + G02)) +
               8 * L * L * Y2 + 1) -
        2 * L * Y * (a00 - 2 * aPM + 2 * aPP);

    const double Bbar_p0 =
        2 * Y *
            (G03 * Y2 * (aP0 + Y * (-L * a00 + 2 * L * (aPM + aPP) + 2 * G * bPP)) +
             G02 * Y2 * (6 * L * bPP - G * (a00 - 4 * L * Y * aP0 - 2 * aPM + 6 * aPP)) +
             4 * G * Y *
                 (L * (aP0 + 4 * L * L * Y2 * aP0 - L * Y * (a00 - 2 * aPM + 6 * aPP)) +
                  G * G * Y * (2 * (2 * L * Y * aP0 + aPM + aPP) - a00)) +
             G0 * (aP0 * (4 * Y2 * LG + 1) +
                   4 * Y3 * (-G * G * L * (a00 - 2 * aPM + 6 * aPP) +
                             L * L * L * (2 * (aPM + aPP) - a00) - 2 * G * G * G * bPP +
                             6 * G * L * L * bPP) -
                   Y * (L * (a00 - 2 * aPM + 6 * aPP) + 6 * G * bPP)) +
             G * (2 * (aPM + aPP) - a00) + 2 * L * bPP * (4 * Y2 * (L * L - 3 * G * G) - 1)) +
        bP0 * (Y4 * (-((G02 + 4 * L * L) * (G02 + 4 * L * L) - 16 * G * G * G * G)) +
               8 * G * G * Y2 + 1);

    const double c2 = m.cosh_theta() * m.cosh_theta();
    const double c4 = c2 * c2;
    CounterpartCoeffs c;
    c.cosh_sq = c2;
    c.a_p = c2 * Abar_p;
    c.b_p = c2 * Bbar_p;
    c.a00 = c4 * Abar_00;
    c.a_pm = c4 * Abar_pm;
    c.a_pp = c4 * Abar_pp;
    c.b_pp = c4 * Bbar_pp;
    c.a_0p = c4 * Abar_0p;
    c.b_0p = c4 * Bbar_0p;
    c.a_p0 = c4 * Abar_p0;
    c.b_p0 = c4 * Bbar_p0;
    return c;
}

Mat assemble_counterpart(const CounterpartCoeffs& c, const SpinRep& rep) {
    const Mat& L0 = rep.L0;
    const Mat& Lp = rep.Lp;
    const Mat& Lm = rep.Lm;
    const cxd lin(c.a_p + c.a_0p, c.b_p + c.b_0p);
    const cxd cross(c.a_0p + c.a_p0, c.b_0p + c.b_p0);
    const cxd quad_pp(c.a_pp, c.b_pp);
    return -2.0 * c.a_pm * L0 + c.a00 * (L0 * L0) + 2.0 * c.a_pm * (Lp * Lm) +
           lin * Lp + std::conj(lin) * Lm + quad_pp * (Lp * Lp) +
           std::conj(quad_pp) * (Lm * Lm) + cross * (Lp * L0) +
           std::conj(cross) * (L0 * Lm);
}

ConjugationResult conjugation_oracle(const Mat& H, const LinearMetricParams& m,
                                     const SpinRep& rep) {
    const MatL T = to_long(metric_exponent(m, rep));
    const MatL eta = expm(T);
    const MatL eta_inv = expm(MatL(-T));
    ConjugationResult res;
    // h eta = eta H, solved column-wise through the transpose
    const MatL rhs = (eta * to_long(H)).transpose();
    Eigen::PartialPivLU<MatL> lu(eta.transpose());
    res.h = to_double(MatL(lu.solve(rhs).transpose()));
    const long double ne = eta.cwiseAbs().maxCoeff();
    const long double ni = eta_inv.cwiseAbs().maxCoeff();
    res.conditioning_warning = static_cast<double>(ne * ni) > 1e12;
    return res;
}

MetricOperator make_metric_operator(const LinearMetricParams& m, const SpinRep& rep) {
    const MatL T = to_long(metric_exponent(m, rep));
    MetricOperator op;
    op.eta = to_double(expm(T));
    op.eta_inv = to_double(expm(MatL(-T)));
    op.rho = op.eta.adjoint() * op.eta;
    return op;
}

PseudoQuasiReport verify_pseudo_quasi_hermiticity(const Mat& H,
                                                  const LinearMetricParams& m,
                                                  const SpinRep& rep, double tol) {
    const MetricOperator op = make_metric_operator(m, rep);
    PseudoQuasiReport r;
    r.rho_hermiticity_residual = hermiticity_residual(op.rho);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (op.rho + op.rho.adjoint()));
    r.rho_min_eigenvalue = es.eigenvalues().minCoeff();
    r.intertwining_residual = norm_max(H.adjoint() * op.rho - op.rho * H);
    const double scale = std::max(1.0, norm_max(op.rho) * norm_max(H));
    r.rho_hermitian = r.rho_hermiticity_residual <= tol * std::max(1.0, norm_max(op.rho));
    r.rho_positive_definite = r.rho_min_eigenvalue > tol;
    r.intertwines = r.intertwining_residual <= tol * scale;
    r.pass = r.rho_hermitian && r.rho_positive_definite && r.intertwines;
    return r;
}

}  // namespace su2metric
