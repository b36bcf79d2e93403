#include "su2metric/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "su2metric/bogoliubov.hpp"
#include "su2metric/counterpart.hpp"
#include "su2metric/quad_metric.hpp"
#include "su2metric/spectra.hpp"

namespace su2metric {

namespace {

double fig1_beta0(double theta) {
    // 64 sqrt(8-th^2) sinh^2/ (th^2 + 16 sinh^2), written through sinhc so the
    // theta -> 0 limit 64 sqrt(8)/17 comes out exactly
    const double s2 = sinhc_even(theta * theta);
    const double rad = std::max(8.0 - theta * theta, 0.0);
    return 64.0 * std::sqrt(rad) * s2 * s2 / (1.0 + 16.0 * s2 * s2);
}

HamiltonianParams fig1_params(double theta) {
    HamiltonianParams p;
    p.alpha_p = 4.0;
    p.beta_p = 4.0;
    p.beta0 = fig1_beta0(theta);
    return p;
}

constexpr double kFig2Lambda = 0.3;
constexpr double kFig2Nu = 0.2;

HamiltonianParams fig23_base() {
    HamiltonianParams p;
    p.alpha_pm = 1.0;
    p.alpha_pp = 1.0;
    p.alpha_p0 = 2.0;
    p.beta_p0 = 1.0;
    p.alpha_p = 1.0;
    return p;
}

}  // namespace

double figure2_beta_p(double beta0, double lambda, double nu) {
    const double th = 2.0 * lambda * std::sqrt(1.0 + nu * nu);
    const double t = std::tanh(th);
    const HamiltonianParams b = fig23_base();
    return 0.25 * (2.0 * (2.0 * b.alpha_p * nu - b.alpha_p0 * nu + b.beta_p0) +
                   beta0 * std::sqrt(nu * nu + 1.0) * (t + 1.0 / t));
}

Figure1Result reproduce_figure1(int points, int two_l, double tol) {
    const SpinRep rep = build_spin_rep(two_l);
    Figure1Result res;
    res.data.sweep_name = "theta";
    const double lim = 2.0 * std::sqrt(2.0);
    double worst = 0, worst_law = 0;
    for (int i = 0; i < points; ++i) {
        const double theta = -lim + 2.0 * lim * i / (points - 1);
        const HamiltonianParams p = fig1_params(theta);
        const LinearMetricParams m{1.0, 1.0, std::sqrt(std::max(8.0 - theta * theta, 0.0))};
        const Mat H = build_hamiltonian(p, rep);
        const Mat h = assemble_counterpart(counterpart_coeffs(p, m), rep);
        const auto evH = eigenvalues(H).eigenvalues;
        const auto evh = eigenvalues(h).eigenvalues;
        worst = std::max(worst, compare_spectra(evH, evh, tol).max_pair_distance);
        // eigenvalue law 2m sqrt(ap^2 + bp^2 - b0^2/4)
        const double w = std::sqrt(p.alpha_p * p.alpha_p + p.beta_p * p.beta_p -
                                   0.25 * p.beta0 * p.beta0);
        std::vector<cxd> law;
        for (int k = 0; k <= two_l; ++k) law.push_back(cxd((2.0 * k - two_l) * w, 0.0));
        worst_law = std::max(worst_law,
                             compare_spectra(evH, law, tol).max_pair_distance);
        res.data.sweep.push_back(theta);
        res.data.h_spectra.push_back(evH);
        res.data.counterpart_spectra.push_back(evh);
    }
    res.max_pair_distance = worst;
    res.max_eigenlaw_deviation = worst_law;
    res.matched = worst < tol;
    return res;
}

Figure2Result reproduce_figure2(int points, int two_l, double tol) {
    const SpinRep rep = build_spin_rep(two_l);
    Figure2Result res;
    res.data.sweep_name = "beta0";
    const double lim = 2.0 * std::sqrt(2.0);
    const LinearMetricParams m{kFig2Lambda, kFig2Nu * kFig2Lambda, 0.0};
    const double Y = m.Y();

    auto constrained_params = [&](double beta0) {
        HamiltonianParams p = fig23_base();
        p.beta0 = beta0;
        p.beta_p = figure2_beta_p(beta0, kFig2Lambda, kFig2Nu);
        const auto forced = forced_diagonal_couplings(p, m, Y);
        if (!forced) throw std::runtime_error("figure2: forced couplings singular");
        p.alpha00 = forced->first;
        p.beta_pp = forced->second;
        return p;
    };

    double worst = 0;
    for (int i = 0; i < points; ++i) {
        const double beta0 = -lim + 2.0 * lim * i / (points - 1);
        const HamiltonianParams p = constrained_params(beta0);
        const Mat H = build_hamiltonian(p, rep);
        const Mat h = assemble_counterpart(counterpart_coeffs(p, m), rep);
        const auto evH = eigenvalues(H).eigenvalues;
        const auto evh = eigenvalues(h).eigenvalues;
        worst = std::max(worst, compare_spectra(evH, evh, tol).max_pair_distance);
        res.data.sweep.push_back(beta0);
        res.data.h_spectra.push_back(evH);
        res.data.counterpart_spectra.push_back(evh);
    }
    res.max_pair_distance = worst;
    res.matched = worst < tol;

    // avoided crossings: strictly positive local minima of adjacent-level gaps
    // on a denser grid
    const int dense = 201;
    std::vector<std::vector<double>> levels;
    for (int i = 0; i < dense; ++i) {
        const double beta0 = -lim + 2.0 * lim * i / (dense - 1);
        const auto ev = eigenvalues(build_hamiltonian(constrained_params(beta0), rep));
        std::vector<double> re;
        for (const cxd& e : ev.eigenvalues) re.push_back(e.real());
        std::sort(re.begin(), re.end());
        levels.push_back(re);
    }
    double min_gap = -1, min_gap_at = 0;
    for (size_t j = 0; j + 1 < levels[0].size(); ++j) {
        for (int i = 1; i + 1 < dense; ++i) {
            const double g = levels[i][j + 1] - levels[i][j];
            const double gl = levels[i - 1][j + 1] - levels[i - 1][j];
            const double gr = levels[i + 1][j + 1] - levels[i + 1][j];
            if (g < gl && g < gr && g > 1e-10) {
                if (min_gap < 0 || g < min_gap) {
                    min_gap = g;
                    min_gap_at = -lim + 2.0 * lim * i / (dense - 1);
                }
            }
        }
    }
    res.avoided_crossing_found = min_gap > 0;
    res.min_gap = std::max(min_gap, 0.0);
    res.min_gap_at = min_gap_at;
    return res;
}

Figure3Result reproduce_figure3(int points, int two_l) {
    const SpinRep rep = build_spin_rep(two_l);
    Figure3Result res;
    res.data.sweep_name = "beta0";
    HamiltonianParams p = fig23_base();
    p.beta_p = 2.0;

    const LinearMetricParams m{kFig2Lambda, kFig2Nu * kFig2Lambda, 0.0};
    // couplings forced by the fixed metric; independent of beta0
    const auto forced = forced_diagonal_couplings(p, m, m.Y());
    if (!forced) throw std::runtime_error("figure3: forced couplings singular");
    res.alpha00 = forced->first;
    res.beta_pp = forced->second;
    p.alpha00 = res.alpha00;
    p.beta_pp = res.beta_pp;

    // the constraint metric exists where the figure-2 relation returns beta_p = 2
    {
        double lo = 0.1, hi = 6.0;
        for (int k = 0; k < 200; ++k) {
            const double mid = 0.5 * (lo + hi);
            (figure2_beta_p(mid, kFig2Lambda, kFig2Nu) > 2.0 ? hi : lo) = mid;
        }
        res.solvable_beta0 = 0.5 * (lo + hi);
    }

    // spectra over the negative window shown in the plot
    for (int i = 0; i < points; ++i) {
        const double beta0 = -4.0 + 4.0 * i / (points - 1);
        HamiltonianParams q = p;
        q.beta0 = beta0;
        res.data.sweep.push_back(beta0);
        res.data.h_spectra.push_back(eigenvalues(build_hamiltonian(q, rep)).eigenvalues);
    }

    // reality edge on |beta0|, scanning outward from the solvable point
    const RealityScan scan =
        reality_scan(p, "beta0", res.solvable_beta0, 4.0, 31, rep);
    res.breakdown_found = scan.breakdown_found;
    res.bracket_lo = scan.bracket_lo;
    res.bracket_hi = scan.bracket_hi;
    return res;
}

Figure4Result reproduce_figure4(int points, double beta0_max) {
    Figure4Result res;
    res.data.sweep_name = "beta0";
    res.zeta_minus = quadconst_zeta_minus(0.25);
    double worst = 0;
    bool all_real = true;
    for (int i = 0; i < points; ++i) {
        const double beta0 = -beta0_max + 2.0 * beta0_max * i / (points - 1);
        const Figure4Eigenvalues ev = figure4_eigenvalues(beta0);
        worst = std::max(worst, ev.max_difference);
        all_real = all_real && ev.all_real;
        res.data.sweep.push_back(beta0);
        res.data.h_spectra.push_back({ev.numeric[0], ev.numeric[1], ev.numeric[2]});
        std::vector<cxd> an(ev.analytic.begin(), ev.analytic.end());
        std::sort(an.begin(), an.end(), [](cxd a, cxd b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        res.data.counterpart_spectra.push_back(an);
    }
    res.formula_vs_numeric_max = worst;
    res.all_real = all_real;
    return res;
}

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string spectra_csv(const SweepData& d, bool counterpart) {
    const auto& spectra = counterpart ? d.counterpart_spectra : d.h_spectra;
    std::string out = "# su2metric spectra csv v1; columns: sweep_value,eig_index,re,im\n";
    for (size_t i = 0; i < d.sweep.size(); ++i) {
        for (size_t k = 0; k < spectra[i].size(); ++k) {
            out += format_g17(d.sweep[i]);
            out += ',';
            out += std::to_string(k);
            out += ',';
            out += format_g17(spectra[i][k].real());
            out += ',';
            out += format_g17(spectra[i][k].imag());
            out += '\n';
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

}  // namespace su2metric
