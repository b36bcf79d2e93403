#include <doctest.h>

#include <cmath>

#include "su2metric/expm.hpp"
#include "su2metric/spectra.hpp"
#include "test_util.hpp"

using namespace su2metric;
using testutil::random_params;
using testutil::uniform;

TEST_CASE("eigenvalues of simple matrices") {
    Mat D = Mat::Zero(3, 3);
    D(0, 0) = 3;
    D(1, 1) = 1;
    D(2, 2) = 2;
    const auto r = eigenvalues(D);
    CHECK(r.is_real);
    CHECK(r.eigenvalues[0] == cxd(1, 0));
    CHECK(r.eigenvalues[1] == cxd(2, 0));
    CHECK(r.eigenvalues[2] == cxd(3, 0));

    const SpinRep rep = build_spin_rep(10);
    const auto r5 = eigenvalues(rep.L0);
    for (int i = 0; i < 11; ++i)
        CHECK(std::abs(r5.eigenvalues[i] - cxd(i - 5.0, 0)) < 1e-13);

    CHECK_THROWS_AS(eigenvalues(Mat::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("eigenpairs satisfy the backward-error contract") {
    const SpinRep rep = build_spin_rep(6);
    for (int t = 0; t < 5; ++t) {
        const Mat H = build_hamiltonian(random_params(), rep);
        const auto pairs = eigenpairs(H);
        CHECK(pairs.max_backward_error < 1e-10);
    }
}

TEST_CASE("conjugate pairing for the symmetric family") {
    const SpinRep rep = build_spin_rep(10);
    for (int t = 0; t < 25; ++t) {
        HamiltonianParams p = random_params(2.0);
        const auto r = eigenvalues(build_hamiltonian(p, rep));
        CHECK(r.conjugate_paired);
    }
}

TEST_CASE("compare spectra") {
    const SpinRep rep = build_spin_rep(6);
    const Mat H = build_hamiltonian(random_params(), rep);
    SUBCASE("identical input") {
        const auto r = compare_spectra(H, H);
        CHECK(r.matched);
        CHECK(r.max_pair_distance == 0.0);
    }
    SUBCASE("similarity invariance") {
        Mat S = Mat::Random(rep.dim(), rep.dim());
        S += 3.0 * Mat::Identity(rep.dim(), rep.dim());
        const Mat Hs = S * H * S.inverse();
        CHECK(compare_spectra(H, Hs, 1e-9).matched);
    }
    SUBCASE("dimension mismatch throws") {
        CHECK_THROWS_AS(compare_spectra(H, Mat::Zero(2, 2)), std::invalid_argument);
    }
}

TEST_CASE("block embedding keeps irrep spectra") {
    const HamiltonianParams p = random_params();
    const SpinRep r1 = build_spin_rep(2);
    const SpinRep r2 = build_spin_rep(4);
    const Mat H1 = build_hamiltonian(p, r1);
    const Mat H2 = build_hamiltonian(p, r2);
    Mat block = Mat::Zero(r1.dim() + r2.dim(), r1.dim() + r2.dim());
    block.topLeftCorner(r1.dim(), r1.dim()) = H1;
    block.bottomRightCorner(r2.dim(), r2.dim()) = H2;
    std::vector<cxd> expected = eigenvalues(H1).eigenvalues;
    for (const cxd& e : eigenvalues(H2).eigenvalues) expected.push_back(e);
    CHECK(compare_spectra(eigenvalues(block).eigenvalues, expected, 1e-9).matched);
}

TEST_CASE("reality scan on the linear subclass") {
    const SpinRep rep = build_spin_rep(10);
    HamiltonianParams p;
    p.alpha_p = 1.0;
    // breakdown at |beta0| = 2 for alpha_p = 1, beta_p = 0
    const auto scan = reality_scan(p, "beta0", 0.5, 3.5, 31, rep);
    CHECK(scan.breakdown_found);
    CHECK(scan.bracket_lo <= 2.0 + 1e-6);
    CHECK(scan.bracket_hi >= 2.0 - 1e-6);
    CHECK(scan.bracket_hi - scan.bracket_lo < 1e-6);

    CHECK_THROWS_AS(reality_scan(p, "nope", 0, 1, 3, rep), std::invalid_argument);
    CHECK_THROWS_AS(reality_scan(p, "beta0", 0, 1, 1, rep), std::invalid_argument);
}

TEST_CASE("max imag curve is symmetric in beta0") {
    const SpinRep rep = build_spin_rep(10);
    HamiltonianParams p;
    p.alpha_pm = 1;
    p.alpha_pp = 1;
    p.alpha_p0 = 2;
    p.beta_p0 = 1;
    p.alpha_p = 1;
    p.beta_p = 2;
    for (double b0 : {0.6, 1.7, 3.4}) {
        HamiltonianParams a = p, b = p;
        a.beta0 = b0;
        b.beta0 = -b0;
        const double ma = eigenvalues(build_hamiltonian(a, rep)).max_imag_abs;
        const double mb = eigenvalues(build_hamiltonian(b, rep)).max_imag_abs;
        CHECK(std::abs(ma - mb) < 1e-10 * (1 + ma));
    }
}
