#include <doctest.h>

#include <cmath>

#include "su2metric/expm.hpp"
#include "su2metric/quad_metric.hpp"
#include "su2metric/spectra.hpp"
#include "test_util.hpp"

using namespace su2metric;
using testutil::random_params;
using testutil::uniform;

TEST_CASE("quad adjoint actions match the exponential conjugation") {
    for (int two_l : {1, 2, 3, 4}) {
        const SpinRep rep = build_spin_rep(two_l);
        for (int t = 0; t < 25; ++t) {
            QuadMetricParams q;
            q.zeta0 = uniform(-0.3, 0.3);
            q.zeta_plus = uniform(-0.3, 0.3);
            q.zeta_minus = uniform(-0.3, 0.3);
            const Mat eta = build_quad_metric(q, rep);
            const Mat eta_inv = eta.fullPivLu().inverse();
            const Mat gens[3] = {rep.L0, rep.Lp, rep.Lm};
            const Generator tags[3] = {Generator::L0, Generator::Lplus, Generator::Lminus};
            for (int i = 0; i < 3; ++i) {
                const Mat direct = eta * gens[i] * eta_inv;
                const Mat closed = quad_adjoint_action(q, tags[i], rep);
                CHECK(norm_max(direct - closed) < 1e-9 * std::max(1.0, norm_max(direct)));
            }
        }
    }
}

TEST_CASE("zero exponents leave generators unchanged") {
    const SpinRep rep = build_spin_rep(3);
    QuadMetricParams q;
    CHECK(norm_max(quad_adjoint_action(q, Generator::L0, rep) - rep.L0) < 1e-14);
    CHECK(norm_max(quad_adjoint_action(q, Generator::Lplus, rep) - rep.Lp) < 1e-14);
    CHECK(norm_max(quad_adjoint_action(q, Generator::Lminus, rep) - rep.Lm) < 1e-14);
}

TEST_CASE("L0 + 2 zeta L+^2 is triangular with the L0 spectrum") {
    const SpinRep rep = build_spin_rep(6);
    const double z = 0.37;
    const Mat M = rep.L0 + 2.0 * z * (rep.Lp * rep.Lp);
    for (int i = 0; i < rep.dim(); ++i)
        for (int j = 0; j < i; ++j) CHECK(std::abs(M(i, j)) == 0.0);
    const auto ev = eigenvalues(M);
    CHECK(ev.is_real);
    for (int i = 0; i < rep.dim(); ++i)
        CHECK(std::abs(ev.eigenvalues[i].real() - (i - 3.0)) < 1e-12);
}

TEST_CASE("spin-1 constraint closed forms") {
    SUBCASE("zeta_minus special values") {
        CHECK(quadconst_zeta_minus(0.0) == 0.0);
        const double expect = (2.0 - std::sqrt(7.0)) / 6.0;
        CHECK(std::abs(quadconst_zeta_minus(0.25) - expect) < 1e-12);
        // regular at the formula's former removable singularities
        CHECK(std::abs(quadconst_zeta_minus(0.5) + 0.25) < 1e-12);
        CHECK(std::abs(quadconst_zeta_minus(-0.5) - 0.25) < 1e-12);
        CHECK_THROWS_AS(quadconst_zeta_minus(0.9), std::domain_error);
    }
    SUBCASE("forced couplings hermitize at l = 1 with free diagonals") {
        const SpinRep rep = build_spin_rep(2);
        for (int t = 0; t < 40; ++t) {
            const double zp = uniform(-0.69, 0.69);
            const double z0 = uniform(-0.5, 0.5);
            HamiltonianParams p = random_params();
            QuadConstraintSolution s;
            try {
                s = solve_quad_constraints_spin1(z0, zp, p);
            } catch (const std::domain_error&) {
                continue;
            }
            p.beta0 = s.beta0;
            p.beta_p = s.beta_p;
            p.alpha_p = s.alpha_p;
            const Mat H = build_hamiltonian(p, rep);
            const Mat eta = build_quad_metric(s.metric, rep);
            const Mat h = eta * H * eta.fullPivLu().inverse();
            CHECK(hermiticity_residual(h) < 1e-9 * std::max(1.0, norm_max(h)));
        }
    }
    SUBCASE("domain violation rejected") {
        CHECK_THROWS_AS(solve_quad_constraints_spin1(0.0, 0.9, {}), std::domain_error);
    }
}

TEST_CASE("closing-example eigenvalues") {
    SUBCASE("beta0 = 0 gives {-1, 12, 15} exactly") {
        const auto r = figure4_eigenvalues(0.0);
        CHECK(std::abs(r.analytic[0] - cxd(12, 0)) < 1e-12);
        CHECK(std::abs(r.analytic[1] - cxd(15, 0)) < 1e-12);
        CHECK(std::abs(r.analytic[2] - cxd(-1, 0)) < 1e-12);
        CHECK(r.max_difference < 1e-10);
        CHECK(r.all_real);
    }
    SUBCASE("formula matches diagonalization across beta0") {
        for (double b0 : {0.5, 2.0, 10.0, -4.0}) {
            const auto r = figure4_eigenvalues(b0);
            CHECK(r.max_difference < 1e-10);
            CHECK(r.all_real);
        }
    }
    SUBCASE("the caption metric hermitizes the hamiltonian for any zeta0") {
        const SpinRep rep = build_spin_rep(2);
        for (double z0 : {0.0, 0.3, -0.7}) {
            for (double b0 : {0.5, 2.0}) {
                QuadMetricParams q;
                q.zeta0 = z0;
                q.zeta_plus = 0.25;
                q.zeta_minus = quadconst_zeta_minus(0.25);
                const Mat H = build_hamiltonian(figure4_hamiltonian(b0), rep);
                const Mat eta = build_quad_metric(q, rep);
                const Mat h = eta * H * eta.fullPivLu().inverse();
                CHECK(hermiticity_residual(h) < 1e-9 * std::max(1.0, norm_max(h)));
            }
        }
    }
}

TEST_CASE("no coexistence with the linear-exponent families (statistical, reported)") {
    // sampled quadratic-metric-solvable Hamiltonians; count how many also admit
    // a linear-exponent metric
    int samples = 0, coexist = 0;
    while (samples < 200) {
        const double zp = uniform(-0.69, 0.69);
        const double z0 = uniform(-0.4, 0.4);
        HamiltonianParams p = random_params();
        QuadConstraintSolution s;
        try {
            s = solve_quad_constraints_spin1(z0, zp, p);
        } catch (const std::domain_error&) {
            continue;
        }
        p.beta0 = s.beta0;
        p.beta_p = s.beta_p;
        p.alpha_p = s.alpha_p;
        ++samples;
        for (double nu : {-0.7, -0.3, 0.3, 0.7}) {
            for (const auto& sol : solve_quadratic_family(p, nu).solutions) {
                if (std::abs(sol.forced.at("alpha00") - p.alpha00) < 1e-7 &&
                    std::abs(sol.forced.at("beta_pp") - p.beta_pp) < 1e-7) {
                    ++coexist;
                }
            }
        }
    }
    MESSAGE("coexistence count over ", samples, " samples: ", coexist);
    WARN(coexist == 0);
}
