#include "su2metric/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "su2metric/expm.hpp"

#include <Eigen/Eigenvalues>

namespace su2metric {

namespace {

bool lex_less(const cxd& a, const cxd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

std::vector<cxd> solve_dense(const Mat& M) {
    const Eigen::Index n = M.rows();
    std::vector<cxd> out(n);
    if (n <= 128) {
        // extended precision keeps near-defective spectra accurate
        Eigen::ComplexEigenSolver<MatL> es(to_long(M), false);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigenvalues: QR iteration did not converge");
        for (Eigen::Index i = 0; i < n; ++i)
            out[i] = static_cast<cxd>(es.eigenvalues()(i));
    } else {
        Eigen::ComplexEigenSolver<Mat> es(M, false);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigenvalues: QR iteration did not converge");
        for (Eigen::Index i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

SpectrumResult eigenvalues(const Mat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eigenvalues: square input required");
    if (M.rows() > 512) throw std::invalid_argument("eigenvalues: dim > 512 unsupported");
    SpectrumResult r;
    r.eigenvalues = solve_dense(M);
    double mx = 0;
    for (const cxd& e : r.eigenvalues)
        mx = std::max(mx, std::abs(e.imag()) / (1.0 + std::abs(e)));
    r.max_imag_abs = mx;
    r.is_real = mx <= kRealityTol;

    // complex values must pair into (e, conj e) within 2 * tol
    std::vector<cxd> complex_ones;
    for (const cxd& e : r.eigenvalues)
        if (std::abs(e.imag()) > kRealityTol * (1.0 + std::abs(e))) complex_ones.push_back(e);
    bool paired = complex_ones.size() % 2 == 0;
    std::vector<bool> used(complex_ones.size(), false);
    for (size_t i = 0; paired && i < complex_ones.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (size_t j = i + 1; j < complex_ones.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(complex_ones[j] - std::conj(complex_ones[i])) <=
                2 * kRealityTol * (1.0 + std::abs(complex_ones[i]))) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        paired = found;
    }
    r.conjugate_paired = paired;
    return r;
}

EigenPairs eigenpairs(const Mat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eigenpairs: square input required");
    Eigen::ComplexEigenSolver<Mat> es(M, true);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigenpairs: QR iteration did not converge");
    EigenPairs r;
    r.vectors = es.eigenvectors();
    const double nrm = std::max(1e-300, norm_max(M));
    double worst = 0;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        r.values.push_back(es.eigenvalues()(i));
        const Eigen::VectorXcd v = r.vectors.col(i);
        worst = std::max(worst, (M * v - es.eigenvalues()(i) * v).cwiseAbs().maxCoeff() / nrm);
    }
    r.max_backward_error = worst;
    return r;
}

SpectraComparison compare_spectra(std::vector<cxd> a, std::vector<cxd> b, double tol) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_spectra: dimension mismatch");
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    SpectraComparison r;
    for (size_t i = 0; i < a.size(); ++i)
        r.max_pair_distance = std::max(r.max_pair_distance, std::abs(a[i] - b[i]));
    r.matched = r.max_pair_distance <= tol;
    return r;
}

SpectraComparison compare_spectra(const Mat& A, const Mat& B, double tol) {
    return compare_spectra(eigenvalues(A).eigenvalues, eigenvalues(B).eigenvalues, tol);
}

double HamiltonianParams::*param_field(const std::string& name) {
    if (name == "beta0") return &HamiltonianParams::beta0;
    if (name == "alpha_p") return &HamiltonianParams::alpha_p;
    if (name == "beta_p") return &HamiltonianParams::beta_p;
    if (name == "alpha00") return &HamiltonianParams::alpha00;
    if (name == "alpha_p0") return &HamiltonianParams::alpha_p0;
    if (name == "beta_p0") return &HamiltonianParams::beta_p0;
    if (name == "alpha_pp") return &HamiltonianParams::alpha_pp;
    if (name == "beta_pp") return &HamiltonianParams::beta_pp;
    if (name == "alpha_pm") return &HamiltonianParams::alpha_pm;
    throw std::invalid_argument("unknown coupling name: " + name);
}

RealityScan reality_scan(const HamiltonianParams& base, const std::string& parameter,
                         double lo, double hi, int points, const SpinRep& rep,
                         double tol) {
    if (points < 2) throw std::invalid_argument("reality_scan: need at least 2 points");
    double HamiltonianParams::*field = param_field(parameter);
    RealityScan scan;
    scan.parameter = parameter;
    auto max_imag_at = [&](double v) {
        HamiltonianParams p = base;
        p.*field = v;
        return eigenvalues(build_hamiltonian(p, rep)).max_imag_abs;
    };
    for (int i = 0; i < points; ++i) {
        const double v = lo + (hi - lo) * i / (points - 1);
        scan.grid.push_back(v);
        scan.max_imag.push_back(max_imag_at(v));
    }
    for (int i = 1; i < points; ++i) {
        const bool was_real = scan.max_imag[i - 1] <= tol;
        const bool is_complex = scan.max_imag[i] > tol;
        if (was_real && is_complex) {
            double a = scan.grid[i - 1], b = scan.grid[i];
            for (int k = 0; k < 60 && std::abs(b - a) > 1e-10 * (1 + std::abs(b)); ++k) {
                const double mid = 0.5 * (a + b);
                (max_imag_at(mid) > tol ? b : a) = mid;
            }
            scan.breakdown_found = true;
            scan.bracket_lo = a;
            scan.bracket_hi = b;
            break;
        }
    }
    return scan;
}

}  // namespace su2metric
