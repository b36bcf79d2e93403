#ifndef SU2METRIC_FIGURES_HPP
#define SU2METRIC_FIGURES_HPP

#include <string>
#include <vector>

#include "su2metric/linear_metric.hpp"
#include "su2metric/spin.hpp"

namespace su2metric {

/// One sweep: per grid point the spectra of H and (when present) the
/// Hermitian counterpart.
struct SweepData {
    std::string sweep_name;
    std::vector<double> sweep;
    std::vector<std::vector<cxd>> h_spectra;
    std::vector<std::vector<cxd>> counterpart_spectra;  // may be empty
};

struct Figure1Result {
    SweepData data;
    bool matched = false;
    double max_pair_distance = 0;
    double max_eigenlaw_deviation = 0;  // vs 2m sqrt(ap^2+bp^2-b0^2/4)
};
Figure1Result reproduce_figure1(int points = 25, int two_l = 10, double tol = 1e-8);

/// beta_p that satisfies the quadratic-family constraint for the fixed metric.
double figure2_beta_p(double beta0, double lambda, double nu);

struct Figure2Result {
    SweepData data;
    bool matched = false;
    double max_pair_distance = 0;
    bool avoided_crossing_found = false;
    double min_gap = 0;            // smallest strictly positive local gap minimum
    double min_gap_at = 0;         // sweep value of that minimum
};
Figure2Result reproduce_figure2(int points = 25, int two_l = 10, double tol = 1e-8);

struct Figure3Result {
    SweepData data;                      // spectrum over the scan grid
    double alpha00 = 0, beta_pp = 0;     // couplings forced by the fixed metric
    double solvable_beta0 = 0;           // where the constraint metric exists
    bool breakdown_found = false;
    double bracket_lo = 0, bracket_hi = 0;  // on |beta0|
};
Figure3Result reproduce_figure3(int points = 41, int two_l = 10);

struct Figure4Result {
    SweepData data;
    double formula_vs_numeric_max = 0;
    bool all_real = false;
    double zeta_minus = 0;               // from zeta_plus = 1/4
};
Figure4Result reproduce_figure4(int points = 50, double beta0_max = 10.0);

/// CSV with fixed schema: '#' header line then sweep_value,eig_index,re,im
/// rows; 17 significant digits, '\n' endings, deterministic order.
std::string spectra_csv(const SweepData& d, bool counterpart);
void write_file(const std::string& path, const std::string& content);

std::string format_g17(double v);

}  // namespace su2metric

#endif
