#include <doctest.h>

#include <cmath>

#include "su2metric/counterpart.hpp"
#include "su2metric/spectra.hpp"
#include "test_util.hpp"

using namespace su2metric;
using testutil::random_params;
using testutil::uniform;

namespace {

// random instance on the quadratic-family constraint manifold
struct Solved {
    HamiltonianParams p;
    LinearMetricParams m;
};

std::vector<Solved> solved_instances(int want, double theta_cap = 1.2) {
    std::vector<Solved> out;
    while ((int)out.size() < want) {
        HamiltonianParams p = random_params();
        const double nu = uniform(-0.8, 0.8);
        if (std::abs(nu * nu - 1) < 0.05 || p.beta0 == 0) continue;
        for (const auto& s : solve_quadratic_family(p, nu).solutions) {
            if (std::abs(s.theta) > theta_cap) continue;
            out.push_back({apply_forced(p, s), s.metric});
            if ((int)out.size() == want) break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("zero metric leaves the hamiltonian untouched") {
    const SpinRep rep = build_spin_rep(4);
    const HamiltonianParams p = random_params();
    const Mat H = build_hamiltonian(p, rep);

    const CounterpartCoeffs c = counterpart_coeffs(p, {});
    CHECK(c.a_p == p.alpha_p);
    CHECK(c.b_p == p.beta_p);
    CHECK(c.a00 == p.alpha00);
    CHECK(c.a_pp == p.alpha_pp);
    CHECK(c.b_pp == p.beta_pp);
    CHECK(c.a_pm == p.alpha_pm);
    CHECK(c.a_0p == 0.0);

    const auto conj = conjugation_oracle(H, {}, rep);
    CHECK(norm_max(conj.h - H) < 1e-13);
}

TEST_CASE("assembled closed form equals the conjugation on solved instances") {
    const SpinRep rep = build_spin_rep(4);
    for (const auto& inst : solved_instances(50)) {
        const Mat H = build_hamiltonian(inst.p, rep);
        const Mat closed = assemble_counterpart(counterpart_coeffs(inst.p, inst.m), rep);
        const auto conj = conjugation_oracle(H, inst.m, rep);
        CHECK(norm_max(closed - conj.h) < 1e-8 * std::max(1.0, norm_max(closed)));
        CHECK(hermiticity_residual(closed) < 1e-10 * std::max(1.0, norm_max(closed)));
    }
}

TEST_CASE("off the manifold the assembly disagrees with the conjugation") {
    const SpinRep rep = build_spin_rep(4);
    int detected = 0;
    for (int t = 0; t < 10; ++t) {
        const HamiltonianParams p = random_params();
        const LinearMetricParams m{uniform(-0.4, 0.4), uniform(-0.4, 0.4), 0.0};
        const Mat H = build_hamiltonian(p, rep);
        const Mat closed = assemble_counterpart(counterpart_coeffs(p, m), rep);
        const auto conj = conjugation_oracle(H, m, rep);
        if (norm_max(closed - conj.h) > 1e-6) ++detected;
    }
    CHECK(detected >= 9);
}

TEST_CASE("counterpart coefficient slots match the conjugation slot by slot") {
    // cross sums vanish on-manifold; the linear slot carries a_p + a_0p
    const SpinRep rep = build_spin_rep(4);
    for (const auto& inst : solved_instances(10)) {
        const CounterpartCoeffs c = counterpart_coeffs(inst.p, inst.m);
        CHECK(std::abs(c.a_0p + c.a_p0) < 1e-8 * std::max(1.0, std::abs(c.a_0p)));
        CHECK(std::abs(c.b_0p + c.b_p0) < 1e-8 * std::max(1.0, std::abs(c.b_0p)));
    }
}

TEST_CASE("powers are conserved: linear input stays linear") {
    for (int t = 0; t < 20; ++t) {
        HamiltonianParams p;
        p.beta0 = uniform(-1, 1);
        p.alpha_p = uniform(-1, 1);
        p.beta_p = uniform(-1, 1);
        const LinearMetricParams m{uniform(-0.5, 0.5), uniform(-0.5, 0.5),
                                   uniform(-0.5, 0.5)};
        const CounterpartCoeffs c = counterpart_coeffs(p, m);
        CHECK(c.a00 == 0.0);
        CHECK(c.a_pm == 0.0);
        CHECK(c.a_pp == 0.0);
        CHECK(c.b_pp == 0.0);
        CHECK(c.a_0p == 0.0);
        CHECK(c.b_0p == 0.0);
        CHECK(c.a_p0 == 0.0);
        CHECK(c.b_p0 == 0.0);
    }
}

TEST_CASE("each display line is hermitian as a matrix") {
    const SpinRep rep = build_spin_rep(4);
    const HamiltonianParams p = random_params();
    const LinearMetricParams m{0.3, -0.2, 0.4};
    const CounterpartCoeffs c = counterpart_coeffs(p, m);
    const Mat& L0 = rep.L0;
    const Mat& Lp = rep.Lp;
    const Mat& Lm = rep.Lm;
    const cxd lin(c.a_p + c.a_0p, c.b_p + c.b_0p);
    const cxd cross(c.a_0p + c.a_p0, c.b_0p + c.b_p0);
    const cxd qpp(c.a_pp, c.b_pp);
    const Mat lines[4] = {
        Mat(-2.0 * c.a_pm * L0 + c.a00 * (L0 * L0) + 2.0 * c.a_pm * (Lp * Lm)),
        Mat(lin * Lp + std::conj(lin) * Lm),
        Mat(qpp * (Lp * Lp) + std::conj(qpp) * (Lm * Lm)),
        Mat(cross * (Lp * L0) + std::conj(cross) * (L0 * Lm))};
    for (const Mat& line : lines)
        CHECK(hermiticity_residual(line) < 1e-12 * std::max(1.0, norm_max(line)));
}

TEST_CASE("rotated L0 oracle identity") {
    // i sz Lz + sx Lx with |sx/sz| < 1 conjugates to a diagonal matrix whose
    // spectrum is m times the continued factor sqrt(sx^2 - sz^2)
    const SpinRep rep = build_spin_rep(4);
    const double sz = 2.0, sx = 1.0;
    SigmaParams s;
    s.sz = sz;
    s.sx = sx;
    const Mat H = build_hamiltonian(from_sigma(s), rep);
    const double r = sx / sz;
    const LinearMetricParams m{0.0, -std::atanh(r) / 4.0, 0.0};
    const auto conj = conjugation_oracle(H, m, rep);
    double offdiag = 0;
    for (int i = 0; i < rep.dim(); ++i)
        for (int j = 0; j < rep.dim(); ++j)
            if (i != j) offdiag = std::max(offdiag, std::abs(conj.h(i, j)));
    CHECK(offdiag < 1e-12);
    const double factor = std::sqrt(sz * sz - sx * sx);  // sx^2 - sz^2 < 0 continued
    std::vector<cxd> expected;
    for (int k = 0; k <= rep.two_l; ++k)
        expected.push_back(cxd(0.0, (k - 0.5 * rep.two_l) * factor));
    const auto cmp = compare_spectra(eigenvalues(H).eigenvalues, expected, 1e-10);
    CHECK(cmp.matched);
}

TEST_CASE("pseudo-quasi-hermiticity report") {
    const SpinRep rep = build_spin_rep(4);
    SUBCASE("hermitian H with the identity metric passes trivially") {
        HamiltonianParams p;
        p.alpha_p = 1.0;
        p.alpha00 = 0.5;
        const Mat H = build_hamiltonian(p, rep);
        const auto r = verify_pseudo_quasi_hermiticity(H, {}, rep);
        CHECK(r.pass);
        CHECK(r.rho_min_eigenvalue == doctest::Approx(1.0));
    }
    SUBCASE("solved instances pass; perturbed metrics fail") {
        const auto insts = solved_instances(5);
        for (const auto& inst : insts) {
            const Mat H = build_hamiltonian(inst.p, rep);
            const auto r = verify_pseudo_quasi_hermiticity(H, inst.m, rep);
            CHECK(r.pass);
            CHECK(r.rho_min_eigenvalue > 0);
            LinearMetricParams bad = inst.m;
            bad.lambda *= 1.1;
            if (bad.lambda == 0) bad.lambda = 0.1;
            const auto rb = verify_pseudo_quasi_hermiticity(H, bad, rep);
            CHECK_FALSE(rb.pass);
        }
    }
    SUBCASE("gamma0 != 0 solutions still intertwine") {
        for (int t = 0; t < 10; ++t) {
            const HamiltonianParams base = random_params();
            const auto out = solve_gamma_zero_family(base, uniform(0.3, 1.2));
            for (const auto& s : out.solutions) {
                if (std::abs(s.theta) > 1.0) continue;
                const HamiltonianParams p = apply_forced(base, s);
                const Mat H = build_hamiltonian(p, rep);
                const auto r = verify_pseudo_quasi_hermiticity(H, s.metric, rep);
                CHECK(r.intertwines);
            }
        }
    }
}

TEST_CASE("conjugation oracle warns when the map is ill conditioned") {
    const SpinRep rep = build_spin_rep(10);
    const auto conj =
        conjugation_oracle(build_hamiltonian(random_params(), rep), {2.5, 2.5, 0.0}, rep);
    CHECK(conj.conditioning_warning);
}
