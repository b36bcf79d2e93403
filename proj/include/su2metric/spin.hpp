#ifndef SU2METRIC_SPIN_HPP
#define SU2METRIC_SPIN_HPP

#include <complex>
#include <Eigen/Dense>

namespace su2metric {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// Finite spin-l representation, basis ordered m = l, l-1, ..., -l.
/// l is stored as the integer 2l so half-integer spins stay exact.
struct SpinRep {
    int two_l = 0;
    Mat L0, Lp, Lm, Lx, Ly, Lz;

    int dim() const { return two_l + 1; }
    double l() const { return 0.5 * two_l; }
};

/// L+|l,m> = sqrt((l-m)(l+m+1))|l,m+1>, L0|l,m> = m|l,m>.
/// Throws std::invalid_argument for negative 2l.
SpinRep build_spin_rep(int two_l);

/// Flip matrix J with J|l,m> = |l,-m> (anti-diagonal permutation).
/// Realizes L0 -> -L0, L+- -> L-+ under conjugation.
Mat flip_matrix(int dim);

/// Casimir L0^2 + (L+L- + L-L+)/2; equals l(l+1) I in an irrep.
Mat casimir(const SpinRep& rep);

/// The nine real couplings of the symmetric quadratic Hamiltonian family
///   H = i b0 L0 + (ap + i bp)L+ + (ap - i bp)L-
///     + a00 L0^2 + (ap0 + i bp0)L+L0 - (ap0 - i bp0)L-L0
///     + (app + i bpp)L+^2 + (app - i bpp)L-^2 + apm (L+L- + L-L+).
struct HamiltonianParams {
    double beta0 = 0;      // b0
    double alpha_p = 0;    // ap
    double beta_p = 0;     // bp
    double alpha00 = 0;    // a00
    double alpha_p0 = 0;   // ap0
    double beta_p0 = 0;    // bp0
    double alpha_pp = 0;   // app
    double beta_pp = 0;    // bpp
    double alpha_pm = 0;   // apm
};

/// Same family in angular-momentum components,
///   H = i sz Lz + sx Lx + sy Ly + szz Lz^2 + sxx Lx^2 + syy Ly^2
///     + sxy (LxLy + LyLx) + i sxz LxLz + i syz LyLz.
struct SigmaParams {
    double sx = 0, sy = 0, sz = 0;
    double sxx = 0, syy = 0, szz = 0;
    double sxy = 0, sxz = 0, syz = 0;
};

SigmaParams to_sigma(const HamiltonianParams& p);
HamiltonianParams from_sigma(const SigmaParams& s);

Mat build_hamiltonian(const HamiltonianParams& p, const SpinRep& rep);
Mat build_hamiltonian_sigma(const SigmaParams& s, const SpinRep& rep);

/// Max absolute entry; the residual norm used throughout.
double norm_max(const Mat& M);

struct CheckResult {
    bool ok = false;
    double residual = 0;
};

/// || J conj(H) J - H ||_max <= tol, with J the flip matrix.
CheckResult check_antilinear_symmetry(const Mat& H, const SpinRep& rep, double tol = 1e-12);

/// || [H, L^2] ||_max <= tol.
CheckResult check_casimir_commutes(const Mat& H, const SpinRep& rep, double tol = 1e-12);

double hermiticity_residual(const Mat& M);

/// Pointer to a named coupling; throws std::invalid_argument on unknown names.
double HamiltonianParams::*param_field(const std::string& name);

}  // namespace su2metric

#endif
