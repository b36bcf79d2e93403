#ifndef SU2METRIC_SPECTRA_HPP
#define SU2METRIC_SPECTRA_HPP

#include <string>
#include <vector>

#include "su2metric/spin.hpp"

namespace su2metric {

/// An eigenvalue is treated as real when |Im| <= tol (1 + |value|).
constexpr double kRealityTol = 1e-8;

struct SpectrumResult {
    std::vector<cxd> eigenvalues;  // sorted by (re, im)
    double max_imag_abs = 0;       // max |Im| / (1 + |value|)
    bool is_real = false;
    bool conjugate_paired = false;
};

/// Dense spectrum of a general complex matrix (Hessenberg + shifted QR via
/// Eigen's complex Schur).  dim <= 512; dims up to 128 are solved in extended
/// precision to keep near-defective cases accurate.  Throws on
/// non-convergence and on oversized input.
SpectrumResult eigenvalues(const Mat& M);

/// Eigenvalues with backward-error check ||Mv - lv|| / ||M|| per pair.
struct EigenPairs {
    std::vector<cxd> values;
    Mat vectors;
    double max_backward_error = 0;
};
EigenPairs eigenpairs(const Mat& M);

struct SpectraComparison {
    bool matched = false;
    double max_pair_distance = 0;
};
/// Lexicographic sort then index-wise pairing.  Throws on dimension mismatch.
SpectraComparison compare_spectra(const Mat& A, const Mat& B, double tol = 1e-8);
SpectraComparison compare_spectra(std::vector<cxd> a, std::vector<cxd> b, double tol = 1e-8);

struct RealityScan {
    std::string parameter;
    std::vector<double> grid;
    std::vector<double> max_imag;      // scale-relative, per grid point
    bool breakdown_found = false;
    double bracket_lo = 0, bracket_hi = 0;  // brackets the real -> complex edge
};

/// Sweeps one named coupling of HamiltonianParams over [lo, hi]; locates the
/// first real -> complex transition along the grid and refines it by bisection.
RealityScan reality_scan(const HamiltonianParams& base, const std::string& parameter,
                         double lo, double hi, int points, const SpinRep& rep,
                         double tol = kRealityTol);

/// Pointer to a named coupling; throws std::invalid_argument on unknown names.
double HamiltonianParams::*param_field(const std::string& name);

}  // namespace su2metric

#endif
