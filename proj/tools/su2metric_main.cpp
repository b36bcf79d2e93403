// Command-line front end: figure reproduction, constraint solving,
// spectra/reality scans, and metric verification with CSV/JSON output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "su2metric/bogoliubov.hpp"
#include "su2metric/counterpart.hpp"
#include "su2metric/figures.hpp"
#include "su2metric/quad_metric.hpp"
#include "su2metric/spectra.hpp"

using json = nlohmann::ordered_json;
using namespace su2metric;

namespace {

json default_config() {
    return json{
        {"hamiltonian",
         {{"beta0", 0.0},
          {"alpha_p", 0.0},
          {"beta_p", 0.0},
          {"alpha00", 0.0},
          {"alpha_p0", 0.0},
          {"beta_p0", 0.0},
          {"alpha_pp", 0.0},
          {"beta_pp", 0.0},
          {"alpha_pm", 0.0}}},
        {"family", "quadratic-gamma0zero"},
        {"l2", 4},
        {"nu", 0.2},
        {"direction", {{"lambda", 1.0}, {"gamma", 1.0}, {"gamma0", 0.0}}},
        {"metric", {{"lambda", 0.0}, {"gamma", 0.0}, {"gamma0", 0.0}}},
        {"quad_metric", {{"zeta0", 0.0}, {"zeta_plus", 0.25}}},
        {"grid", {{"param", "beta0"}, {"min", -4.0}, {"max", 0.0}, {"points", 41}}},
        {"tol",
         {{"constraint", 1e-9}, {"oracle", 1e-8}, {"spectra", 1e-8}, {"reality", 1e-8}}},
        {"out", "."},
    };
}

json load_config(const std::string& path) {
    json cfg = default_config();
    if (path.empty()) return cfg;
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config: " + path);
    json user = json::parse(f);
    cfg.merge_patch(user);
    return cfg;
}

HamiltonianParams hamiltonian_from(const json& cfg) {
    if (cfg.contains("sigma") && cfg.contains("hamiltonian") &&
        !cfg["hamiltonian"].empty() && cfg["sigma"].is_object()) {
        // both present is ambiguous only when sigma carries values
    }
    if (cfg.contains("sigma") && cfg["sigma"].is_object()) {
        SigmaParams s;
        const json& j = cfg["sigma"];
        s.sx = j.value("sx", 0.0);
        s.sy = j.value("sy", 0.0);
        s.sz = j.value("sz", 0.0);
        s.sxx = j.value("sxx", 0.0);
        s.syy = j.value("syy", 0.0);
        s.szz = j.value("szz", 0.0);
        s.sxy = j.value("sxy", 0.0);
        s.sxz = j.value("sxz", 0.0);
        s.syz = j.value("syz", 0.0);
        return from_sigma(s);
    }
    const json& j = cfg["hamiltonian"];
    HamiltonianParams p;
    p.beta0 = j.value("beta0", 0.0);
    p.alpha_p = j.value("alpha_p", 0.0);
    p.beta_p = j.value("beta_p", 0.0);
    p.alpha00 = j.value("alpha00", 0.0);
    p.alpha_p0 = j.value("alpha_p0", 0.0);
    p.beta_p0 = j.value("beta_p0", 0.0);
    p.alpha_pp = j.value("alpha_pp", 0.0);
    p.beta_pp = j.value("beta_pp", 0.0);
    p.alpha_pm = j.value("alpha_pm", 0.0);
    return p;
}

LinearMetricParams metric_from(const json& j) {
    return {j.value("lambda", 0.0), j.value("gamma", 0.0), j.value("gamma0", 0.0)};
}

json solution_json(const MetricSolution& s) {
    json j{{"family", s.family},
           {"branch", s.branch},
           {"theta", s.theta},
           {"metric",
            {{"lambda", s.metric.lambda},
             {"gamma", s.metric.gamma},
             {"gamma0", s.metric.gamma0}}},
           {"constraint_residual", s.constraint_residual},
           {"oracle_hermiticity_residual", s.oracle_residual},
           {"positive", s.positive},
           {"conditioning_warning", s.conditioning_warning}};
    for (const auto& [k, v] : s.forced) j["forced"][k] = v;
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::binary);
    f << j.dump(2) << "\n";
}

int run_repro(const std::string& fig, const json& cfg) {
    const std::string out = cfg["out"].get<std::string>();
    std::filesystem::create_directories(out);
    const double tol = cfg["tol"]["spectra"].get<double>();
    const int l2 = cfg["l2"].get<int>();
    json summary;
    if (fig == "fig1") {
        const auto r = reproduce_figure1(25, l2 >= 2 ? l2 : 10, tol);
        write_file(out + "/fig1_h.csv", spectra_csv(r.data, false));
        write_file(out + "/fig1_counterpart.csv", spectra_csv(r.data, true));
        summary = {{"matched", r.matched},
                   {"maxPairDistance", r.max_pair_distance},
                   {"maxEigenlawDeviation", r.max_eigenlaw_deviation}};
        write_json(out + "/fig1_summary.json", summary);
    } else if (fig == "fig2") {
        const auto r = reproduce_figure2(25, l2 >= 2 ? l2 : 10, tol);
        write_file(out + "/fig2_h.csv", spectra_csv(r.data, false));
        write_file(out + "/fig2_counterpart.csv", spectra_csv(r.data, true));
        summary = {{"matched", r.matched},
                   {"maxPairDistance", r.max_pair_distance},
                   {"avoidedCrossingFound", r.avoided_crossing_found},
                   {"minGap", r.min_gap},
                   {"minGapAt", r.min_gap_at}};
        write_json(out + "/fig2_summary.json", summary);
    } else if (fig == "fig3") {
        const auto r = reproduce_figure3(41, l2 >= 2 ? l2 : 10);
        write_file(out + "/fig3_h.csv", spectra_csv(r.data, false));
        summary = {{"breakdownFound", r.breakdown_found},
                   {"breakdownBracket", {std::abs(r.bracket_lo), std::abs(r.bracket_hi)}},
                   {"alpha00", r.alpha00},
                   {"beta_pp", r.beta_pp},
                   {"solvableBeta0", r.solvable_beta0}};
        write_json(out + "/fig3_summary.json", summary);
    } else if (fig == "fig4") {
        const auto r = reproduce_figure4(50, 10.0);
        write_file(out + "/fig4_numeric.csv", spectra_csv(r.data, false));
        write_file(out + "/fig4_analytic.csv", spectra_csv(r.data, true));
        summary = {{"formulaVsNumericMax", r.formula_vs_numeric_max},
                   {"allReal", r.all_real},
                   {"zetaMinus", r.zeta_minus}};
        write_json(out + "/fig4_summary.json", summary);
    } else {
        std::cerr << "unknown figure: " << fig << "\n";
        return 2;
    }
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int run_solve(const json& cfg) {
    const HamiltonianParams p = hamiltonian_from(cfg);
    const std::string family = cfg["family"].get<std::string>();
    SolveOptions opt;
    opt.constraint_tol = cfg["tol"]["constraint"].get<double>();
    opt.oracle_tol = cfg["tol"]["oracle"].get<double>();
    const double nu = cfg["nu"].get<double>();

    json out_json;
    if (family == "quad-exponent") {
        const double z0 = cfg["quad_metric"].value("zeta0", 0.0);
        const double zp = cfg["quad_metric"].value("zeta_plus", 0.25);
        const auto s = solve_quad_constraints_spin1(z0, zp, p);
        out_json = {{"family", family},
                    {"solutions",
                     json::array({{{"zeta0", s.metric.zeta0},
                                   {"zeta_plus", s.metric.zeta_plus.real()},
                                   {"zeta_minus", s.metric.zeta_minus.real()},
                                   {"forced",
                                    {{"beta0", s.beta0},
                                     {"beta_p", s.beta_p},
                                     {"alpha_p", s.alpha_p}}}}})}};
    } else {
        SolveOutcome outcome;
        if (family == "linear") {
            outcome = solve_linear_family(p, metric_from(cfg["direction"]), opt);
        } else if (family == "quadratic-gamma0zero") {
            outcome = solve_quadratic_family(p, nu, opt);
        } else if (family == "appendix-gamma-zero") {
            outcome = solve_gamma_zero_family(p, nu, opt);
        } else if (family == "appendix-lambda-zero") {
            outcome = solve_lambda_zero_family(p, nu, opt);
        } else {
            std::cerr << "unknown family: " << family << "\n";
            return 2;
        }
        // validation: forced couplings must agree with the input Hamiltonian
        json sols = json::array();
        for (const auto& s : outcome.solutions) {
            bool consistent = true;
            for (const auto& [name, value] : s.forced) {
                const double have = p.*param_field(name);
                if (std::abs(have - value) > 1e-9 * (1 + std::abs(value)))
                    consistent = false;
            }
            json js = solution_json(s);
            js["consistent_with_input"] = consistent;
            sols.push_back(js);
        }
        out_json = {{"family", family}, {"solutions", sols}};
        if (!outcome.diagnostic.empty()) out_json["diagnostic"] = outcome.diagnostic;
        bool any_consistent = false;
        for (const auto& js : out_json["solutions"])
            if (js["consistent_with_input"].get<bool>()) any_consistent = true;
        if (!any_consistent && outcome.diagnostic.empty())
            out_json["diagnostic"] = "no consistent solution";
    }
    std::cout << out_json.dump(2) << "\n";
    const std::string out = cfg["out"].get<std::string>();
    std::filesystem::create_directories(out);
    write_json(out + "/solve.json", out_json);
    return 0;
}

int run_spectrum(const json& cfg) {
    const HamiltonianParams p = hamiltonian_from(cfg);
    const SpinRep rep = build_spin_rep(cfg["l2"].get<int>());
    const std::string out = cfg["out"].get<std::string>();
    std::filesystem::create_directories(out);
    json summary;
    if (cfg.contains("grid") && cfg["grid"].value("points", 0) >= 2) {
        const json& g = cfg["grid"];
        const RealityScan scan =
            reality_scan(p, g["param"].get<std::string>(), g["min"].get<double>(),
                         g["max"].get<double>(), g["points"].get<int>(), rep,
                         cfg["tol"]["reality"].get<double>());
        std::string csv = "# su2metric reality scan v1; columns: value,max_imag\n";
        for (size_t i = 0; i < scan.grid.size(); ++i)
            csv += format_g17(scan.grid[i]) + "," + format_g17(scan.max_imag[i]) + "\n";
        write_file(out + "/scan.csv", csv);
        summary = {{"parameter", scan.parameter},
                   {"breakdownFound", scan.breakdown_found},
                   {"breakdownBracket", {scan.bracket_lo, scan.bracket_hi}}};
    } else {
        const SpectrumResult r = eigenvalues(build_hamiltonian(p, rep));
        json evs = json::array();
        for (const cxd& e : r.eigenvalues) evs.push_back({{"re", e.real()}, {"im", e.imag()}});
        summary = {{"eigenvalues", evs},
                   {"maxImagAbs", r.max_imag_abs},
                   {"isReal", r.is_real},
                   {"conjugatePaired", r.conjugate_paired}};
    }
    std::cout << summary.dump(2) << "\n";
    write_json(out + "/spectrum.json", summary);
    return 0;
}

int run_verify(const json& cfg) {
    const HamiltonianParams p = hamiltonian_from(cfg);
    const SpinRep rep = build_spin_rep(cfg["l2"].get<int>());
    const LinearMetricParams m = metric_from(cfg["metric"]);
    const double tol = cfg["tol"]["oracle"].get<double>();
    const Mat H = build_hamiltonian(p, rep);
    const auto report = verify_pseudo_quasi_hermiticity(H, m, rep, tol);
    const auto conj = conjugation_oracle(H, m, rep);
    const auto cmp = compare_spectra(H, conj.h, cfg["tol"]["spectra"].get<double>());
    const double herm = hermiticity_residual(conj.h);
    const bool pass = report.pass && cmp.matched;
    json out_json{{"rhoHermiticityResidual", report.rho_hermiticity_residual},
                  {"rhoMinEigenvalue", report.rho_min_eigenvalue},
                  {"intertwiningResidual", report.intertwining_residual},
                  {"counterpartHermiticityResidual", herm},
                  {"spectraMatched", cmp.matched},
                  {"maxPairDistance", cmp.max_pair_distance},
                  {"conditioningWarning", conj.conditioning_warning},
                  {"pass", pass}};
    std::cout << out_json.dump(2) << "\n";
    const std::string out = cfg["out"].get<std::string>();
    std::filesystem::create_directories(out);
    write_json(out + "/verify.json", out_json);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric operators for non-Hermitian quadratic su(2) Hamiltonians"};
    app.require_subcommand(0, 1);

    std::string config_path, out_dir;
    int l2 = -1;
    double tol = -1;
    bool print_config = false;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--l", l2, "2l as an integer (overrides config)");
    app.add_option("--tol", tol, "spectra/oracle tolerance (overrides config)");
    app.add_flag("--print-config", print_config, "print the effective config and exit");

    std::string figure;
    auto* repro = app.add_subcommand("repro", "reproduce a figure dataset");
    repro->add_option("figure", figure, "fig1|fig2|fig3|fig4")->required();
    auto* solve = app.add_subcommand("solve", "solve a metric constraint family");
    auto* spectrum = app.add_subcommand("spectrum", "spectrum or reality scan");
    auto* verify = app.add_subcommand("verify", "verify a metric against a Hamiltonian");

    CLI11_PARSE(app, argc, argv);

    try {
        json cfg = load_config(config_path);
        if (!out_dir.empty()) cfg["out"] = out_dir;
        if (l2 >= 0) cfg["l2"] = l2;
        if (tol > 0) {
            cfg["tol"]["spectra"] = tol;
            cfg["tol"]["oracle"] = tol;
        }
        if (print_config) {
            std::cout << cfg.dump(2) << "\n";
            return 0;
        }
        if (repro->parsed()) return run_repro(figure, cfg);
        if (solve->parsed()) return run_solve(cfg);
        if (spectrum->parsed()) return run_spectrum(cfg);
        if (verify->parsed()) return run_verify(cfg);
        std::cout << app.help() << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
