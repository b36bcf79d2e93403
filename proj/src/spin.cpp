#include "su2metric/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace su2metric {

SpinRep build_spin_rep(int two_l) {
    if (two_l < 0) throw std::invalid_argument("build_spin_rep: 2l must be >= 0");
    SpinRep rep;
    rep.two_l = two_l;
    const int dim = two_l + 1;
    const double l = 0.5 * two_l;
    rep.L0 = Mat::Zero(dim, dim);
    rep.Lp = Mat::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double m = l - i;
        rep.L0(i, i) = m;
        if (i >= 1) rep.Lp(i - 1, i) = std::sqrt((l - m) * (l + m + 1));
    }
    rep.Lm = rep.Lp.adjoint();
    rep.Lz = rep.L0;
    rep.Lx = 0.5 * (rep.Lp + rep.Lm);
    rep.Ly = cxd(0, -0.5) * (rep.Lp - rep.Lm);
    return rep;
}

Mat flip_matrix(int dim) {
    Mat J = Mat::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) J(i, dim - 1 - i) = 1.0;
    return J;
}

Mat casimir(const SpinRep& rep) {
    return rep.L0 * rep.L0 + 0.5 * (rep.Lp * rep.Lm + rep.Lm * rep.Lp);
}

SigmaParams to_sigma(const HamiltonianParams& p) {
    SigmaParams s;
    s.sx = 2 * p.alpha_p;
    s.sy = -2 * p.beta_p;
    s.sz = p.beta0;
    s.sxx = 2 * (p.alpha_pm + p.alpha_pp);
    s.syy = 2 * (p.alpha_pm - p.alpha_pp);
    s.szz = p.alpha00;
    s.sxy = -2 * p.beta_pp;
    s.sxz = 2 * p.beta_p0;
    s.syz = 2 * p.alpha_p0;
    return s;
}

HamiltonianParams from_sigma(const SigmaParams& s) {
    HamiltonianParams p;
    p.alpha_p = s.sx / 2;
    p.beta_p = -s.sy / 2;
    p.beta0 = s.sz;
    p.alpha_pm = (s.sxx + s.syy) / 4;
    p.alpha_pp = (s.sxx - s.syy) / 4;
    p.alpha00 = s.szz;
    p.beta_pp = -s.sxy / 2;
    p.beta_p0 = s.sxz / 2;
    p.alpha_p0 = s.syz / 2;
    return p;
}

Mat build_hamiltonian(const HamiltonianParams& p, const SpinRep& rep) {
    const Mat& L0 = rep.L0;
    const Mat& Lp = rep.Lp;
    const Mat& Lm = rep.Lm;
    const cxd I(0, 1);
    return I * p.beta0 * L0 + (p.alpha_p + I * p.beta_p) * Lp +
           (p.alpha_p - I * p.beta_p) * Lm + p.alpha00 * (L0 * L0) +
           (p.alpha_p0 + I * p.beta_p0) * (Lp * L0) -
           (p.alpha_p0 - I * p.beta_p0) * (Lm * L0) +
           (p.alpha_pp + I * p.beta_pp) * (Lp * Lp) +
           (p.alpha_pp - I * p.beta_pp) * (Lm * Lm) +
           p.alpha_pm * (Lp * Lm + Lm * Lp);
}

Mat build_hamiltonian_sigma(const SigmaParams& s, const SpinRep& rep) {
    const Mat& Lx = rep.Lx;
    const Mat& Ly = rep.Ly;
    const Mat& Lz = rep.Lz;
    const cxd I(0, 1);
    return I * s.sz * Lz + s.sx * Lx + s.sy * Ly + s.szz * (Lz * Lz) +
           s.sxx * (Lx * Lx) + s.syy * (Ly * Ly) + s.sxy * (Lx * Ly + Ly * Lx) +
           I * s.sxz * (Lx * Lz) + I * s.syz * (Ly * Lz);
}

double norm_max(const Mat& M) {
    return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

CheckResult check_antilinear_symmetry(const Mat& H, const SpinRep& rep, double tol) {
    if (H.rows() != rep.dim() || H.cols() != rep.dim())
        throw std::invalid_argument("check_antilinear_symmetry: dimension mismatch");
    const Mat J = flip_matrix(rep.dim());
    const double r = norm_max(J * H.conjugate() * J - H);
    return {r <= tol, r};
}

CheckResult check_casimir_commutes(const Mat& H, const SpinRep& rep, double tol) {
    if (H.rows() != rep.dim() || H.cols() != rep.dim())
        throw std::invalid_argument("check_casimir_commutes: dimension mismatch");
    const Mat L2 = casimir(rep);
    const double r = norm_max(H * L2 - L2 * H);
    return {r <= tol, r};
}

double hermiticity_residual(const Mat& M) {
    return norm_max(M - M.adjoint());
}

}  // namespace su2metric
