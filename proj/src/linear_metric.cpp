#include "su2metric/linear_metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "su2metric/counterpart.hpp"
#include "su2metric/expm.hpp"

namespace su2metric {

cxd LinearMetricParams::theta() const {
    return std::sqrt(cxd(theta_sq(), 0.0));
}

double cosh_even(double t2) {
    if (std::abs(t2) < 1e-8)
        return 1.0 + t2 / 2.0 + t2 * t2 / 24.0;
    return t2 >= 0 ? std::cosh(std::sqrt(t2)) : std::cos(std::sqrt(-t2));
}

double sinhc_even(double t2) {
    if (std::abs(t2) < 1e-8)
        return 1.0 + t2 / 6.0 + t2 * t2 / 120.0;
    if (t2 >= 0) {
        const double t = std::sqrt(t2);
        return std::sinh(t) / t;
    }
    const double t = std::sqrt(-t2);
    return std::sin(t) / t;
}

double tanhc_even(double t2) {
    if (std::abs(t2) < 1e-8)
        return 1.0 - t2 / 3.0 + 2.0 * t2 * t2 / 15.0;
    return sinhc_even(t2) / cosh_even(t2);
}

double LinearMetricParams::cosh_theta() const { return cosh_even(theta_sq()); }
double LinearMetricParams::sinhc_theta() const { return sinhc_even(theta_sq()); }
double LinearMetricParams::Y() const { return tanhc_even(theta_sq()); }

Mat metric_exponent(const LinearMetricParams& m, const SpinRep& rep) {
    return 2.0 * (m.lambda0() * rep.L0 + m.lambda_plus() * rep.Lp +
                  m.lambda_minus() * rep.Lm);
}

Mat build_metric(const LinearMetricParams& m, const SpinRep& rep) {
    return to_double(expm(to_long(metric_exponent(m, rep))));
}

AdjointMatrix3 adjoint_matrix(const LinearMetricParams& m) {
    const cxd l0 = m.lambda0(), lp = m.lambda_plus(), lm = m.lambda_minus();
    const double c = m.cosh_theta(), s = m.sinhc_theta();
    const cxd up = c + l0 * s, dn = c - l0 * s;
    AdjointMatrix3 a;
    a.b << 1.0 + 8.0 * lp * lm * s * s, -2.0 * lp * s * up, 2.0 * lm * s * dn,
        -4.0 * lm * s * up, up * up, -4.0 * lm * lm * s * s,
        4.0 * lp * s * dn, -4.0 * lp * lp * s * s, dn * dn;
    return a;
}

GaussFactors gauss_decompose(const LinearMetricParams& m) {
    const cxd den = m.cosh_theta() + m.lambda0() * m.sinhc_theta();
    if (std::abs(den) < 1e-14)
        throw std::domain_error("gauss_decompose: cosh(theta) + lambda0 sinh(theta)/theta = 0");
    GaussFactors g;
    g.kappa0 = std::log(den);
    g.kappa_plus = m.lambda_plus() * m.sinhc_theta() / den;
    g.kappa_minus = m.lambda_minus() * m.sinhc_theta() / den;
    return g;
}

ConstraintSystem constraint_coefficients(const HamiltonianParams& p,
                                         const LinearMetricParams& mm) {
    const double b0 = p.beta0, aP = p.alpha_p, bP = p.beta_p, a00 = p.alpha00,
                 aP0 = p.alpha_p0, bP0 = p.beta_p0, aPP = p.alpha_pp,
                 bPP = p.beta_pp, aPM = p.alpha_pm;
    const double L = mm.lambda, G = mm.gamma, G0 = mm.gamma0;
    const double LG = G * G + L * L;
    ConstraintSystem c;
    c.xi[0] = {
        b0,
        4 * G * (2 * aP - aP0) - 4 * L * (2 * bP - bP0),
        2 * G0 * (2 * L * aP0 + 2 * G * bP0 - 4 * aP * L - 4 * bP * G + b0 * G0),
        4 * (4 * LG - G0 * G0) * (G * (aP0 - 2 * aP) - L * bP0 + 2 * bP * L),
        (G0 * G0 - 4 * LG) *
            (4 * G0 * (L * aP0 + G * bP0 - 2 * aP * L - 2 * bP * G) +
             b0 * (4 * LG + G0 * G0)),
    };
    c.xi[1] = {
        aP0,
        -2 * (G0 * bP0 + 2 * L * (a00 - 2 * aPM + 2 * aPP) + 4 * G * bPP),
        4 * (6 * L * (L * aP0 + G * bP0) +
             G0 * (G * (a00 - 2 * (aPM + 3 * aPP)) + 6 * L * bPP)),
        -4 * L * a00 * (4 * LG + G0 * G0) - 24 * G0 * LG * bP0 -
            2 * G0 * G0 * G0 * bP0 +
            32 * (G * G * L * (aPM + 3 * aPP) + L * L * L * (aPM - aPP) +
                  G * G * G * bPP - 3 * G * L * L * bPP) +
            8 * G0 * G0 * (L * aPM + 3 * L * aPP + 3 * G * bPP),
        16 * LG * ((L - G) * (G + L) * aP0 + 2 * G * L * bP0) +
            24 * G * G0 * G0 * (L * bP0 - G * aP0) -
            G0 * G0 * G0 * G0 * aP0 +
            16 * G0 *
                (G * G * G * (a00 - 2 * aPM + 2 * aPP) +
                 G * L * L * (a00 - 2 * (aPM + 3 * aPP)) +
                 2 * (L * L * L - 3 * G * G * L) * bPP) +
            4 * G0 * G0 * G0 * (G * (a00 - 2 * aPM + 2 * aPP) - 2 * L * bPP),
    };
    c.xi[2] = {
        bP0,
        -4 * G * a00 + 2 * G0 * aP0 + 8 * G * (aPM + aPP) - 8 * L * bPP,
        24 * G * (L * aP0 + G * bP0) -
            4 * G0 * (L * (a00 - 2 * aPM + 6 * aPP) + 6 * G * bPP),
        2 * (12 * G0 * LG * aP0 + G0 * G0 * G0 * aP0 -
             8 * G * G * G * (a00 - 2 * (aPM + aPP)) -
             8 * G * L * L * (a00 - 2 * aPM + 6 * aPP) -
             2 * G0 * G0 * G * (a00 - 2 * aPM + 6 * aPP) +
             4 * L * (3 * (G0 * G0 - 4 * G * G) + 4 * L * L) * bPP),
        4 * (8 * G * L * LG * aP0 + 6 * G * G0 * G0 * L * aP0 -
             4 * G0 *
                 (G * G * L * (a00 - 2 * aPM + 6 * aPP) +
                  L * L * L * (a00 - 2 * (aPM + aPP)) + 2 * G * G * G * bPP -
                  6 * G * L * L * bPP) +
             G0 * G0 * G0 * (-L * a00 + 2 * L * (aPM + aPP) + 2 * G * bPP)) -
            (24 * G0 * G0 * L * L + G0 * G0 * G0 * G0 + 16 * L * L * L * L -
             16 * G * G * G * G) *
                bP0,
    };
    return c;
}

double ConstraintSystem::eval(int i, double Y) const {
    double acc = 0, yk = 1;
    for (int k = 0; k < 5; ++k) {
        acc += xi[i][k] * yk;
        yk *= Y;
    }
    return acc;
}

double ConstraintSystem::max_residual(double Y) const {
    return std::max({std::abs(eval(0, Y)), std::abs(eval(1, Y)), std::abs(eval(2, Y))});
}

std::optional<std::pair<double, double>> forced_diagonal_couplings(
    const HamiltonianParams& p, const LinearMetricParams& m, double Y) {
    auto eval23 = [&](double a00, double bpp) {
        HamiltonianParams q = p;
        q.alpha00 = a00;
        q.beta_pp = bpp;
        const ConstraintSystem c = constraint_coefficients(q, m);
        return std::pair<double, double>{c.eval(1, Y), c.eval(2, Y)};
    };
    const auto [f20, f30] = eval23(0, 0);
    const auto [f2a, f3a] = eval23(1, 0);
    const auto [f2b, f3b] = eval23(0, 1);
    Eigen::Matrix2d A;
    A << f2a - f20, f2b - f20, f3a - f30, f3b - f30;
    Eigen::Vector2d rhs(-f20, -f30);
    const double det = A.determinant();
    const double scale = A.cwiseAbs().maxCoeff();
    if (std::abs(det) <= 1e-12 * std::max(1.0, scale * scale)) return std::nullopt;
    Eigen::Vector2d x = A.fullPivLu().solve(rhs);
    return std::make_pair(x(0), x(1));
}

HamiltonianParams apply_forced(const HamiltonianParams& p, const MetricSolution& s) {
    HamiltonianParams q = p;
    for (const auto& [name, value] : s.forced) {
        q.*param_field(name) = value;
    }
    return q;
}

double solution_oracle_residual(const HamiltonianParams& p, const MetricSolution& s,
                                const SolveOptions& opt) {
    const SpinRep rep = build_spin_rep(opt.oracle_two_l);
    const HamiltonianParams q = apply_forced(p, s);
    const Mat H = build_hamiltonian(q, rep);
    const auto res = conjugation_oracle(H, s.metric, rep);
    return hermiticity_residual(res.h);
}

namespace {

void finalize(MetricSolution& s, const HamiltonianParams& p, const SolveOptions& opt) {
    const HamiltonianParams q = apply_forced(p, s);
    const ConstraintSystem c = constraint_coefficients(q, s.metric);
    s.constraint_residual = c.max_residual(s.metric.Y());
    s.positive = s.metric.positive();
    s.conditioning_warning = std::abs(s.theta) > opt.conditioning_theta;
    s.oracle_residual = solution_oracle_residual(p, s, opt);
}

bool solution_order(const MetricSolution& a, const MetricSolution& b) {
    if (a.branch != b.branch) return a.branch < b.branch;
    return a.theta < b.theta;
}

constexpr double kGateTol = 1e-12;

}  // namespace

SolveOutcome solve_linear_family(const HamiltonianParams& p,
                                 const LinearMetricParams& direction,
                                 const SolveOptions& opt) {
    if (std::abs(p.alpha_p0) > kGateTol || std::abs(p.beta_p0) > kGateTol ||
        std::abs(p.alpha_pp) > kGateTol || std::abs(p.beta_pp) > kGateTol)
        throw std::invalid_argument("solve_linear_family: quadratic couplings must vanish");
    if (std::abs(p.alpha_pm - 0.5 * p.alpha00) > kGateTol)
        throw std::invalid_argument("solve_linear_family: requires alpha_pm = alpha00/2");

    SolveOutcome out;
    if (p.beta0 == 0) {
        MetricSolution s;
        s.family = "linear";
        s.branch = "trivial";
        s.metric = {};
        finalize(s, p, opt);
        out.solutions.push_back(s);
        return out;
    }
    const double bound = 2 * std::hypot(p.alpha_p, p.beta_p);
    if (std::abs(p.beta0) > bound) {
        out.diagnostic = "no solution: |beta0| exceeds 2 sqrt(alpha_p^2 + beta_p^2)";
        return out;
    }

    const double dir_norm = std::max({std::abs(direction.lambda), std::abs(direction.gamma),
                                      std::abs(direction.gamma0)});
    if (dir_norm == 0)
        throw std::invalid_argument("solve_linear_family: zero direction");
    const LinearMetricParams d{direction.lambda / dir_norm, direction.gamma / dir_norm,
                               direction.gamma0 / dir_norm};
    const double that_sq = d.theta_sq();

    auto metric_at = [&](double t) {
        return LinearMetricParams{t * d.lambda, t * d.gamma, t * d.gamma0};
    };
    // f(t) = Y(theta(t)) - beta0 / (Delta - 4 (ap G - bp L)); NaN when the
    // branch is infeasible at this scale.
    auto f = [&](double t, int sign) {
        const LinearMetricParams m = metric_at(t);
        const double L = m.lambda, G = m.gamma, G0 = m.gamma0;
        const double c1 = p.beta_p * L - p.alpha_p * G;
        const double rad = 16 * c1 * c1 +
                           8 * p.beta0 * G0 * (p.alpha_p * L + p.beta_p * G) -
                           p.beta0 * p.beta0 * (G0 * G0 + 4 * (L * L + G * G));
        if (rad < 0) return std::numeric_limits<double>::quiet_NaN();
        const double den = sign * std::sqrt(rad) + 4 * c1;
        if (std::abs(den) < 1e-300) return std::numeric_limits<double>::quiet_NaN();
        return tanhc_even(m.theta_sq()) - p.beta0 / den;
    };

    const double tmax = opt.theta_max / std::sqrt(std::abs(that_sq));
    const double tmin = tmax * 1e-8;
    std::vector<double> ts(opt.grid_points);
    for (int i = 0; i < opt.grid_points; ++i)
        ts[i] = tmin * std::pow(tmax / tmin, double(i) / (opt.grid_points - 1));

    for (int sign : {+1, -1}) {
        double prev_t = 0, prev_f = std::numeric_limits<double>::quiet_NaN();
        for (double t : ts) {
            const double ft = f(t, sign);
            // a jump bigger than O(1) in Y indicates a pole of the continued
            // tan branch, not a root; skip those brackets
            if (std::isfinite(ft) && std::isfinite(prev_f) && prev_f * ft < 0 &&
                std::abs(ft - prev_f) < 10.0) {
                double lo = prev_t, hi = t, flo = prev_f;
                while (hi - lo > opt.bisection_tol * std::max(1.0, hi)) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = f(mid, sign);
                    if (!std::isfinite(fm)) break;
                    if (flo * fm <= 0) hi = mid;
                    else { lo = mid; flo = fm; }
                }
                const double t_root = 0.5 * (lo + hi);
                MetricSolution s;
                s.family = "linear";
                s.branch = sign > 0 ? "+" : "-";
                s.metric = metric_at(t_root);
                const double th2 = s.metric.theta_sq();
                s.theta = th2 >= 0 ? std::sqrt(th2) : 0.0;
                finalize(s, p, opt);
                if (s.oracle_residual < opt.oracle_tol ||
                    s.constraint_residual < opt.constraint_tol)
                    out.solutions.push_back(s);
            }
            prev_t = t;
            prev_f = ft;
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end(), solution_order);
    if (out.solutions.empty()) out.diagnostic = "no root bracketed in the scan window";
    return out;
}

SolveOutcome solve_quadratic_family(const HamiltonianParams& p, double nu,
                                    const SolveOptions& opt) {
    SolveOutcome out;
    if (std::abs(nu * nu - 1.0) < 1e-12) {
        out.diagnostic = "singular nu: nu^2 = 1";
        return out;
    }
    if (p.beta0 == 0) {
        out.diagnostic = "degenerate: beta0 = 0 (closed forms require beta0 != 0)";
        return out;
    }
    const double X = 2 * p.beta_p - p.beta_p0 - (2 * p.alpha_p - p.alpha_p0) * nu;
    const double B = p.beta0 * std::sqrt(1 + nu * nu);
    const double rad = X * X - B * B;
    if (rad < 0) {
        out.diagnostic = "branch infeasible: discriminant negative";
        return out;
    }
    for (int sign : {+1, -1}) {
        const double rhs = (X + sign * std::sqrt(rad)) / B;
        if (std::abs(rhs) >= 1.0) continue;
        const double theta = std::atanh(rhs);
        const double lambda = theta / (2 * std::sqrt(1 + nu * nu));
        MetricSolution s;
        s.family = "quadratic";
        s.branch = sign > 0 ? "+" : "-";
        s.metric = {lambda, nu * lambda, 0.0};
        s.theta = theta;
        const auto forced = forced_diagonal_couplings(p, s.metric, s.metric.Y());
        if (!forced) continue;
        s.forced["alpha00"] = forced->first;
        s.forced["beta_pp"] = forced->second;
        finalize(s, p, opt);
        out.solutions.push_back(s);
    }
    std::sort(out.solutions.begin(), out.solutions.end(), solution_order);
    if (out.solutions.empty() && out.diagnostic.empty())
        out.diagnostic = "no consistent solution";
    return out;
}

namespace {

// Shared quotient machinery for the two appendix families.
// gamma-zero: Ya^2 [b0 (nu^2+4) - 4 nu (2ap - ap0)] - 4 Ya (2bp - bp0) + b0 = 0
// lambda-zero: Ya^2 [b0 (nu^2+4) + 4 nu (bp0 - 2bp)] + 4 Ya (2ap - ap0) + b0 = 0
// with Ya = tanh(theta)/sqrt(4-nu^2) and scale = theta/sqrt(4-nu^2).
SolveOutcome solve_appendix(const HamiltonianParams& p, double nu, bool gamma_zero,
                            const SolveOptions& opt) {
    SolveOutcome out;
    if (std::abs(nu) >= 2.0) {
        out.diagnostic = "nu domain violation: |nu| must be < 2";
        return out;
    }
    if (nu == 0) {
        out.diagnostic = "nu = 0 degenerates to the gamma0 = 0 family";
        return out;
    }
    const std::string family = gamma_zero ? "gamma-zero" : "lambda-zero";
    if (p.beta0 == 0 && p.alpha_p == 0 && p.beta_p == 0 && p.alpha_p0 == 0 &&
        p.beta_p0 == 0) {
        out.diagnostic = "degenerate: linear sector absent, Y unconstrained";
        return out;
    }
    const double root4nu = std::sqrt(4 - nu * nu);
    const double qa = gamma_zero
                          ? p.beta0 * (nu * nu + 4) - 4 * nu * (2 * p.alpha_p - p.alpha_p0)
                          : p.beta0 * (nu * nu + 4) + 4 * nu * (p.beta_p0 - 2 * p.beta_p);
    const double qb = gamma_zero ? -4 * (2 * p.beta_p - p.beta_p0)
                                 : 4 * (2 * p.alpha_p - p.alpha_p0);
    const double qc = p.beta0;
    const double disc = qb * qb - 4 * qa * qc;

    auto metric_of_scale = [&](double scale) {
        return gamma_zero ? LinearMetricParams{scale, 0.0, scale * nu}
                          : LinearMetricParams{0.0, scale, scale * nu};
    };

    if (std::abs(qa) > 1e-14 && disc >= 0) {
        for (int sign : {+1, -1}) {
            const double Ya = (-qb + sign * std::sqrt(disc)) / (2 * qa);
            const double t = Ya * root4nu;  // tanh(theta)
            if (std::abs(t) >= 1.0) continue;
            const double theta = std::atanh(t);
            const double scale = theta / root4nu;
            MetricSolution s;
            s.family = family;
            s.branch = sign > 0 ? "+" : "-";
            s.metric = metric_of_scale(scale);
            s.theta = theta;
            const auto forced = forced_diagonal_couplings(p, s.metric, s.metric.Y());
            if (!forced) continue;
            s.forced["alpha00"] = forced->first;
            s.forced["beta_pp"] = forced->second;
            finalize(s, p, opt);
            out.solutions.push_back(s);
        }
    }

    // Special branches tanh(theta) = +- sqrt(4-nu^2)/nu (need nu^2 > 2);
    // there the (alpha00, beta_pp) system is singular and the constraints
    // force (alpha_p, alpha_pp, beta_pp) instead.
    if (nu * nu > 2.0) {
        for (int sgn : {+1, -1}) {
            const double t = sgn * root4nu / nu;
            if (std::abs(t) >= 1.0) continue;
            const double theta = std::atanh(t);
            const double scale = theta / root4nu;
            MetricSolution s;
            s.family = family;
            s.branch = sgn > 0 ? "special+" : "special-";
            s.metric = metric_of_scale(scale);
            s.theta = theta;
            const double n2 = nu * nu;
            const double quart = (4 + 12 * n2 + n2 * n2) / (8 * nu * (2 + n2));
            if (gamma_zero) {
                s.forced["alpha_p"] = p.alpha_p0 / 2 + p.beta0 * (n2 + 2) / (4 * nu) -
                                      sgn * (p.beta_p - p.beta_p0 / 2);
                s.forced["alpha_pp"] =
                    sgn * (p.alpha_p0 + sgn * p.beta_p0) * (2 + n2) / (8 * nu);
                s.forced["beta_pp"] = sgn * (p.alpha00 / 2 - p.alpha_pm) -
                                      (p.alpha_p0 - sgn * p.beta_p0) * quart;
            } else {
                s.forced["alpha_p"] =
                    p.alpha_p0 / 2 +
                    sgn * (p.beta_p - p.beta_p0 / 2 - p.beta0 * (n2 + 2) / (4 * nu));
                s.forced["alpha_pp"] = (p.alpha_p0 - sgn * p.beta_p0) * (2 + n2) / (8 * nu);
                s.forced["beta_pp"] =
                    -sgn * (p.alpha00 / 2 - p.alpha_pm - (p.alpha_p0 + sgn * p.beta_p0) * quart);
            }
            finalize(s, p, opt);
            out.solutions.push_back(s);
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end(), solution_order);
    if (out.solutions.empty() && out.diagnostic.empty())
        out.diagnostic = "no consistent solution";
    return out;
}

}  // namespace

SolveOutcome solve_gamma_zero_family(const HamiltonianParams& p, double nu,
                                     const SolveOptions& opt) {
    return solve_appendix(p, nu, true, opt);
}

SolveOutcome solve_lambda_zero_family(const HamiltonianParams& p, double nu,
                                      const SolveOptions& opt) {
    return solve_appendix(p, nu, false, opt);
}

}  // namespace su2metric
