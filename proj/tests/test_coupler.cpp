#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ptsim/coupler.hpp"

using namespace ptsim;

namespace {

constexpr Complex kI{0.0, 1.0};

double diff(const Mat2& a, const Mat2& b) { return max_abs_diff(a, b); }

Mat2 similarity(const Mat2& h) {
    const Mat2 r = rotation_r();
    return r * h * inverse(r);
}

}  // namespace

TEST_CASE("hamiltonian_bare lays out coupling and loss as expected") {
    const Mat2 lossless = hamiltonian_bare({1.0, 0.0, 1.0});
    CHECK(diff(lossless, Mat2{0.0, 1.0, 1.0, 0.0}) == 0.0);

    const Mat2 ep = hamiltonian_bare({0.26, 0.26, 2.1});
    CHECK(diff(ep, Mat2{0.0, 0.26, 0.26, Complex{0.0, -0.52}}) == 0.0);

    const Mat2 deep = hamiltonian_bare({0.26, 0.63, 2.1});
    CHECK(diff(deep, Mat2{0.0, 0.26, 0.26, Complex{0.0, -1.26}}) == 0.0);
}

TEST_CASE("CouplerParams rejects unphysical values") {
    CHECK_THROWS_AS(CouplerParams(0.0, 0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(CouplerParams(-0.3, 0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(CouplerParams(0.26, -0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(CouplerParams(0.26, 0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(CouplerParams(0.26, std::nan(""), 1.0), std::domain_error);
}

TEST_CASE("rotation_r is the unitary 50/50 splitter") {
    const Mat2 r = rotation_r();
    CHECK(diff(r * adjoint(r), Mat2::identity()) < 1e-15);

    // equals the lossless bare propagator at kappa z = pi/4
    const CouplerParams p{0.26, 0.0, idealized_length(0.26)};
    CHECK(diff(r, propagator(p, SystemKind::bare)) < 1e-14);
}

TEST_CASE("R H_bare R^-1 reproduces the sandwiched Hamiltonian") {
    for (double gamma : {0.0, 0.13, 0.26, 0.52, 0.63}) {
        const CouplerParams p{0.26, gamma, 2.1};
        CHECK(diff(similarity(hamiltonian_bare(p)), hamiltonian_sandwiched(p)) < 1e-13);
    }
}

TEST_CASE("hamiltonian_sandwiched closed form") {
    // at the EP the upper coupling vanishes
    const Mat2 ep = hamiltonian_sandwiched({0.26, 0.26, 2.1});
    CHECK(diff(ep, Mat2{-0.26 * kI, 0.0, Complex{0.52, 0.0}, -0.26 * kI}) < 1e-16);

    // lossless limit reduces to the Hermitian coupler
    CHECK(diff(hamiltonian_sandwiched({1.0, 0.0, 1.0}), Mat2{0.0, 1.0, 1.0, 0.0}) == 0.0);

    // above the EP the upper coupling changes sign
    const Mat2 above = hamiltonian_sandwiched({0.26, 0.52, 2.1});
    CHECK(diff(above, Mat2{-0.52 * kI, Complex{-0.26, 0.0}, Complex{0.78, 0.0},
                           -0.52 * kI}) < 1e-16);
    CHECK(diff(above, similarity(hamiltonian_bare({0.26, 0.52, 2.1}))) < 1e-13);
}

TEST_CASE("propagator limits: Hermitian beam splitter and the EP Jordan form") {
    const double r = 1.0 / std::numbers::sqrt2;
    const CouplerParams bs{0.26, 0.0, idealized_length(0.26)};
    CHECK(diff(propagator(bs, SystemKind::bare),
               Mat2{Complex{r, 0}, Complex{0, -r}, Complex{0, -r}, Complex{r, 0}}) < 1e-14);

    // sandwiched at gamma = kappa: e^{-kz} [[1, 0], [-2ikz, 1]]
    const double kz = 0.26 * 2.1;
    const double damp = std::exp(-kz);
    const Mat2 expected{Complex{damp, 0.0}, 0.0, Complex{0.0, -2.0 * kz * damp},
                        Complex{damp, 0.0}};
    CHECK(diff(propagator({0.26, 0.26, 2.1}, SystemKind::sandwiched), expected) < 1e-15);
}

TEST_CASE("propagator matches the Taylor oracle off the special points") {
    const CouplerParams p{0.26, 0.39, 2.1};
    const Mat2 want = oracles::taylor_expm(-kI * hamiltonian_bare(p), p.length);
    CHECK(diff(propagator(p, SystemKind::bare), want) < 1e-12);
}

TEST_CASE("propagators are passive and the similarity identity holds") {
    std::mt19937 rng(301);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const Mat2 r = rotation_r();
    const Mat2 r_inv = inverse(r);

    for (int i = 0; i < 500; ++i) {
        const double kappa = 0.05 + 0.95 * u01(rng);
        const double gamma = 3.0 * kappa * u01(rng);
        const double z = 0.01 + 9.99 * u01(rng);
        const CouplerParams p{kappa, gamma, z};

        const Mat2 ub = propagator(p, SystemKind::bare);
        const Mat2 us = propagator(p, SystemKind::sandwiched);

        CHECK(svals2(ub).sigma_max <= 1.0 + 1e-12);
        CHECK(svals2(us).sigma_max <= 1.0 + 1e-12);
        CHECK(diff(us, r * ub * r_inv) <= 1e-12);
    }
}

TEST_CASE("at gamma = 0 both propagators are unitary") {
    std::mt19937 rng(302);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const CouplerParams p{0.05 + 0.95 * u01(rng), 0.0, 0.01 + 9.99 * u01(rng)};
        for (SystemKind kind : {SystemKind::bare, SystemKind::sandwiched}) {
            const Mat2 u = propagator(p, kind);
            CHECK(diff(u * adjoint(u), Mat2::identity()) < 1e-12);
        }
    }
}

TEST_CASE("at the EP the sandwiched propagator never couples 2 -> 1") {
    for (double kappa : {0.1, 0.26, 0.8}) {
        for (double z : {0.2, 1.0, 2.1, 5.0, 10.0}) {
            const Mat2 u = propagator({kappa, kappa, z}, SystemKind::sandwiched);
            CHECK(std::abs(u.a12) <= 1e-12);
        }
    }
}

TEST_CASE("spectrum symmetry below and above the EP") {
    for (double ratio : {0.1, 0.5, 0.9}) {
        const Spectrum2 s = eig2(hamiltonian_bare({0.26, ratio * 0.26, 2.1}));
        CHECK(std::abs(std::real(s.lambda1) + std::real(s.lambda2)) < 1e-12);
        CHECK(std::abs(std::imag(s.lambda1) - std::imag(s.lambda2)) < 1e-12);
    }
    for (double ratio : {1.1, 1.7, 2.4}) {
        const Spectrum2 s = eig2(hamiltonian_bare({0.26, ratio * 0.26, 2.1}));
        CHECK(std::abs(std::real(s.lambda1)) < 1e-12);
        CHECK(std::abs(std::real(s.lambda2)) < 1e-12);
    }
}

TEST_CASE("eigen_spectrum sweep endpoints and the EP row") {
    const double grid[] = {0.0, 0.26, 0.52};
    const auto rows = eigen_spectrum(grid, 0.26);
    REQUIRE(rows.size() == 3);

    CHECK(rows[0].gamma_over_kappa == 0.0);
    CHECK(std::abs(rows[0].lambda1 - Complex{0.26, 0.0}) < 1e-14);
    CHECK(std::abs(rows[0].lambda2 - Complex{-0.26, 0.0}) < 1e-14);

    CHECK(std::abs(rows[1].lambda1 - Complex{0.0, -0.26}) < 1e-12);
    CHECK(std::abs(rows[1].lambda2 - Complex{0.0, -0.26}) < 1e-12);

    // gamma = 2 kappa: lambda = -i gamma +- i sqrt(gamma^2 - kappa^2)
    CHECK(std::abs(rows[2].lambda1 - Complex{0.0, -0.26 * (2.0 - std::sqrt(3.0))}) < 1e-12);
    CHECK(std::abs(rows[2].lambda2 - Complex{0.0, -0.26 * (2.0 + std::sqrt(3.0))}) < 1e-12);
}

TEST_CASE("eigen_spectrum keeps branches continuous through the EP") {
    const auto grid = [] {
        std::vector<double> g;
        for (int i = 0; i <= 600; ++i) g.push_back(0.52 * i / 600.0);
        return g;
    }();
    const auto rows = eigen_spectrum(grid, 0.26);
    // A branch swap away from the EP would jump by ~2 sqrt(kappa^2-gamma^2);
    // the sqrt-type motion right at the EP stays well under 0.05 on this grid.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(rows[i].lambda1 - rows[i - 1].lambda1) < 0.05);
        CHECK(std::abs(rows[i].lambda2 - rows[i - 1].lambda2) < 0.05);
    }
    // branch 1 starts at +kappa and ends as the weakly damped mode
    CHECK(std::real(rows.front().lambda1) == doctest::Approx(0.26).epsilon(1e-12));
    CHECK(std::imag(rows.back().lambda1) > std::imag(rows.back().lambda2));
}

TEST_CASE("eigen_spectrum rejects bad sweeps") {
    CHECK_THROWS_AS(eigen_spectrum(std::span<const double>{}, 0.26), std::domain_error);
    const double bad[] = {-0.1};
    CHECK_THROWS_AS(eigen_spectrum(bad, 0.26), std::domain_error);
    const double ok[] = {0.1};
    CHECK_THROWS_AS(eigen_spectrum(ok, 0.0), std::domain_error);
}
