#include <doctest.h>

#include <cmath>

#include "su2metric/bogoliubov.hpp"
#include "su2metric/counterpart.hpp"
#include "su2metric/spectra.hpp"
#include "test_util.hpp"

using namespace su2metric;
using testutil::uniform;

TEST_CASE("bogoliubov identification") {
    SUBCASE("zero metric gives (0, 1, 1, 0)") {
        const auto b = bogoliubov_from_metric({});
        CHECK(b.alpha == cxd(0, 0));
        CHECK(b.beta == cxd(1, 0));
        CHECK(b.gamma == cxd(1, 0));
        CHECK(b.delta == cxd(0, 0));
    }
    SUBCASE("lambda = 1 evaluates directly") {
        const LinearMetricParams m{1.0, 0.0, 0.0};
        const auto b = bogoliubov_from_metric(m);
        CHECK(std::abs(b.alpha - cxd(2.0 * std::sinh(2.0) / 2.0, 0)) < 1e-14);
        CHECK(std::abs(b.delta - b.alpha) < 1e-14);
        CHECK(std::abs(b.unimodularity() - 1.0) < 1e-12);
    }
    SUBCASE("unimodularity for random metrics") {
        for (int t = 0; t < 200; ++t) {
            const LinearMetricParams m{uniform(-0.8, 0.8), uniform(-0.8, 0.8),
                                       uniform(-0.8, 0.8)};
            CHECK(std::abs(bogoliubov_from_metric(m).unimodularity() - 1.0) < 1e-12);
        }
    }
    SUBCASE("bogoliubov matrix equals the adjoint matrix") {
        for (int t = 0; t < 20; ++t) {
            const LinearMetricParams m{uniform(-0.6, 0.6), uniform(-0.6, 0.6),
                                       uniform(-0.6, 0.6)};
            const auto B = bogoliubov_matrix(bogoliubov_from_metric(m));
            const auto b = adjoint_matrix(m);
            CHECK(norm_max(Mat(B - b.b)) < 1e-12 * std::max(1.0, norm_max(Mat(b.b))));
        }
    }
}

TEST_CASE("diagonalization condition evaluation") {
    HamiltonianParams p;
    p.alpha_p = 1.3;
    p.beta_p = 0.7;
    SUBCASE("direction alpha_p lambda + beta_p gamma = 0 zeroes the residual") {
        const double lambda = 0.4;
        const LinearMetricParams m{lambda, -p.alpha_p * lambda / p.beta_p, 0.0};
        const auto r = diagonalization_condition(p, m);
        CHECK_FALSE(r.pole);
        CHECK(r.residual < 1e-14);
    }
    SUBCASE("pole when alpha_p gamma = beta_p lambda") {
        const LinearMetricParams m{p.alpha_p, p.beta_p, 0.0};
        CHECK(diagonalization_condition(p, m).pole);
    }
    SUBCASE("zero metric with beta0 = 0 is indeterminate") {
        HamiltonianParams q;
        const auto r = diagonalization_condition(q, {});
        CHECK(r.indeterminate);
    }
}

TEST_CASE("diagonalizing metric in the broken regime") {
    HamiltonianParams p;
    p.alpha_p = 1.3;
    p.beta_p = 0.7;
    const double S = std::hypot(p.alpha_p, p.beta_p);
    SUBCASE("unbroken regime has no symmetric diagonalizer") {
        p.beta0 = 1.1;  // < 2S
        CHECK_FALSE(diagonalizing_metric(p).has_value());
    }
    SUBCASE("broken regime diagonalizes with the continued scale") {
        const SpinRep rep = build_spin_rep(4);
        for (double b0 : {3.4, -3.4, 5.0}) {
            p.beta0 = b0;
            const auto m = diagonalizing_metric(p);
            REQUIRE(m.has_value());
            CHECK(diagonalization_condition(p, *m).residual < 1e-12);
            // the continued similarity relation: S t^2 - |b0| t + S = 0
            const double t = std::tanh(std::abs(std::atanh(
                (std::abs(b0) - std::sqrt(b0 * b0 - 4 * S * S)) / (2 * S))));
            CHECK(std::abs(S * t * t - std::abs(b0) * t + S) < 1e-12);
            const Mat H = build_hamiltonian(p, rep);
            const auto conj = conjugation_oracle(H, *m, rep);
            CHECK(offdiagonal_mass(conj.h) < 1e-8);
            // diagonal equals 2m sqrt(S^2 - b0^2/4), continued to imaginary
            const double w = std::sqrt(b0 * b0 / 4.0 - S * S);
            for (int i = 0; i < rep.dim(); ++i) {
                const double m_qn = rep.L0(i, i).real();
                CHECK(std::abs(std::abs(conj.h(i, i).imag()) -
                               std::abs(2.0 * m_qn * w)) < 1e-8);
                CHECK(std::abs(conj.h(i, i).real()) < 1e-8);
            }
        }
    }
    SUBCASE("hermitizing metric does not diagonalize in the unbroken regime") {
        p.beta0 = 1.1;
        const auto out = solve_linear_family(p, {1.0, 0.3, 0.0});
        const SpinRep rep = build_spin_rep(4);
        for (const auto& s : out.solutions) {
            if (s.branch == "trivial") continue;
            const Mat H = build_hamiltonian(p, rep);
            const auto conj = conjugation_oracle(H, s.metric, rep);
            CHECK(hermiticity_residual(conj.h) < 1e-8 * std::max(1.0, norm_max(conj.h)));
            CHECK(offdiagonal_mass(conj.h) > 1e-3);
        }
    }
}
