#include "su2metric/quad_metric.hpp"

#include <cmath>
#include <stdexcept>

#include "su2metric/expm.hpp"
#include "su2metric/spectra.hpp"

namespace su2metric {

Mat build_quad_metric(const QuadMetricParams& q, const SpinRep& rep) {
    const MatL Lp2 = to_long(rep.Lp * rep.Lp);
    const MatL Lm2 = to_long(rep.Lm * rep.Lm);
    const MatL L02 = to_long(rep.L0 * rep.L0);
    using cxl = std::complex<long double>;
    const MatL em = expm(MatL(cxl(q.zeta_minus) * Lm2));
    const MatL e0 = expm(MatL(cxl(q.zeta0) * L02));
    const MatL ep = expm(MatL(cxl(q.zeta_plus) * Lp2));
    return to_double(MatL(em * e0 * ep));
}

Mat quad_adjoint_action(const QuadMetricParams& q, Generator g, const SpinRep& rep) {
    const Mat& L0 = rep.L0;
    const Mat& Lp = rep.Lp;
    const Mat& Lm = rep.Lm;
    const cxd zp = q.zeta_plus, zm = q.zeta_minus;
    const double z0 = q.zeta0;
    const Mat c0 = L0 + 2.0 * zm * (Lm * Lm);
    const Mat c1 = Lp - 2.0 * zm * Lm - 4.0 * zm * (L0 * Lm) -
                   4.0 * zm * zm * (Lm * Lm * Lm);
    const Mat E = to_double(expm(MatL(to_long(2.0 * z0 * c0))));
    const Mat A = c1 * E;
    switch (g) {
        case Generator::L0:
            return c0 - 2.0 * zp * std::exp(2 * z0) * (A * A);
        case Generator::Lplus:
            return std::exp(z0) * A;
        case Generator::Lminus: {
            const Mat Einv = to_double(expm(MatL(to_long(-2.0 * z0 * c0))));
            return std::exp(-z0) * (Einv * Lm) + 2.0 * zp * std::exp(z0) * A +
                   4.0 * zp * std::exp(z0) * (A * c0) -
                   4.0 * zp * zp * std::exp(3 * z0) * (A * A * A);
        }
    }
    throw std::logic_error("unreachable");
}

double quadconst_zeta_minus(double zp) {
    const double rad = 2.0 - 4.0 * zp * zp;
    if (rad < 0) throw std::domain_error("quadconst: |zeta_plus| > 1/sqrt(2)");
    return -zp / (1.0 + std::sqrt(rad));
}

QuadConstraintSolution solve_quad_constraints_spin1(double zeta0, double zeta_plus,
                                                    const HamiltonianParams& p) {
    const double rad = 2.0 - 4.0 * zeta_plus * zeta_plus;
    if (rad < 0) throw std::domain_error("quadconst: |zeta_plus| > 1/sqrt(2)");
    const double root = std::sqrt(rad);
    const double zm = quadconst_zeta_minus(zeta_plus);

    QuadConstraintSolution s;
    s.metric.zeta0 = zeta0;
    s.metric.zeta_plus = zeta_plus;
    s.metric.zeta_minus = zm;
    s.metric.symmetric_mode = false;

    const double zp = zeta_plus;
    s.beta0 = 4 * p.beta_pp * zp * (8 * zp * zp - root + 2) / (16 * zp * zp + 1);

    const double e2 = std::exp(2 * zeta0), e4 = e2 * e2;
    const double up = (2 * zp + 1) * (2 * zp + 1);
    const double dn = (2 * zp - 1) * (2 * zp - 1);
    const double den_b = up - 2 * e2 + e4 * dn;
    const double den_a = dn - 2 * e2 + e4 * up;
    if (std::abs(den_b) < 1e-14 || std::abs(den_a) < 1e-14)
        throw std::domain_error("quadconst: singular coupling denominator");
    s.beta_p = p.beta_p0 * (up - e2 * (1 - 2 * zp * root)) / den_b;
    s.alpha_p = p.alpha_p0 * (dn - e2 * (1 + 2 * zp * root)) / den_a;
    return s;
}

HamiltonianParams figure4_hamiltonian(double beta0) {
    // class form consistent with the always-real closed-form spectrum
    HamiltonianParams p;
    p.beta0 = beta0;
    p.alpha00 = 1.0;
    p.alpha_pm = 3.0;
    p.alpha_pp = -4.0;
    p.beta_pp = 4.0 * beta0 / (5.0 - std::sqrt(7.0));
    return p;
}

Figure4Eigenvalues figure4_eigenvalues(double beta0) {
    const double s7 = std::sqrt(7.0);
    Figure4Eigenvalues r;
    const double inner = 81.0 * beta0 * beta0 + 64.0 * (431.0 - 160.0 * s7);
    const double root = std::sqrt(inner) / (16.0 - 5.0 * s7);
    r.analytic = {cxd(12.0, 0.0), cxd(7.0 + root, 0.0), cxd(7.0 - root, 0.0)};

    const SpinRep rep = build_spin_rep(2);
    const Mat H = build_hamiltonian(figure4_hamiltonian(beta0), rep);
    const SpectrumResult sr = eigenvalues(H);
    for (int i = 0; i < 3; ++i) r.numeric[i] = sr.eigenvalues[i];
    std::array<cxd, 3> sorted_analytic = r.analytic;
    std::sort(sorted_analytic.begin(), sorted_analytic.end(), [](cxd a, cxd b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    double mx = 0;
    for (int i = 0; i < 3; ++i)
        mx = std::max(mx, std::abs(sorted_analytic[i] - r.numeric[i]));
    r.max_difference = mx;
    r.all_real = sr.is_real;
    return r;
}

}  // namespace su2metric
