#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ptsim/coupler.hpp"
#include "ptsim/fock.hpp"

using namespace ptsim;

namespace {

constexpr Complex kI{0.0, 1.0};

Mat2 splitter_50_50() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {Complex{r, 0}, Complex{0, -r}, Complex{0, -r}, Complex{r, 0}};
}

void check_probs(const TwoPhotonProbs& got, const TwoPhotonProbs& want, double tol) {
    CHECK(std::abs(got.p20 - want.p20) < tol);
    CHECK(std::abs(got.p11 - want.p11) < tol);
    CHECK(std::abs(got.p02 - want.p02) < tol);
}

}  // namespace

TEST_CASE("two-photon statistics of the identity and the 50/50 splitter") {
    check_probs(two_photon_probs_indist(Mat2::identity()), {0.0, 1.0, 0.0}, 1e-15);
    check_probs(two_photon_probs_dist(Mat2::identity()), {0.0, 1.0, 0.0}, 1e-15);

    // Hong-Ou-Mandel bunching vs independent coin flips
    check_probs(two_photon_probs_indist(splitter_50_50()), {0.5, 0.0, 0.5}, 1e-14);
    check_probs(two_photon_probs_dist(splitter_50_50()), {0.25, 0.5, 0.25}, 1e-14);
}

TEST_CASE("two-photon statistics match the expansion oracles on a lossy coupler") {
    const CouplerParams p{0.26, 0.39, 2.1};
    const Mat2 u = propagator(p, SystemKind::bare);

    check_probs(two_photon_probs_indist(u), oracles::expand_two_photon_indist(u), 1e-14);
    check_probs(two_photon_probs_dist(u), oracles::expand_two_photon_dist(u), 1e-14);

    // frozen oracle values
    check_probs(two_photon_probs_indist(u),
                {0.10838209634918507, 0.0040132269443414522, 0.0026298906390095789},
                1e-12);
    check_probs(two_photon_probs_dist(u),
                {0.05419104817459254, 0.020896149103285269, 0.0013149453195047895},
                1e-12);
}

TEST_CASE("unphysical transformations are rejected") {
    const Mat2 amplifier{1.2, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(two_photon_probs_indist(amplifier), std::domain_error);
    CHECK_THROWS_AS(two_photon_probs_dist(amplifier), std::domain_error);
    CHECK_THROWS_AS(interference_term(amplifier), std::domain_error);
}

TEST_CASE("interference term: dip, EP null, and peak") {
    CHECK(interference_term(splitter_50_50()) == doctest::Approx(-0.5).epsilon(1e-14));

    for (double z : {0.3, 1.0, 2.1, 7.0}) {
        const Mat2 u = propagator({0.26, 0.26, z}, SystemKind::sandwiched);
        CHECK(interference_term(u) == 0.0);  // U12 vanishes identically at the EP
    }

    const Mat2 above = propagator({0.26, 0.52, 2.1}, SystemKind::sandwiched);
    const double j = interference_term(above);
    CHECK(j > 0.0);
    CHECK(j == doctest::Approx(0.06649115532634553).epsilon(1e-12));
    const TwoPhotonProbs pi_ = two_photon_probs_indist(above);
    const TwoPhotonProbs pd = two_photon_probs_dist(above);
    CHECK(std::abs(pi_.p11 - pd.p11 - j) < 1e-15);
}

TEST_CASE("bunching factor and decomposition identities") {
    std::mt19937 rng(401);
    for (int i = 0; i < 300; ++i) {
        const Mat2 u = oracles::random_subunitary(rng);
        const TwoPhotonProbs pi_ = two_photon_probs_indist(u);
        const TwoPhotonProbs pd = two_photon_probs_dist(u);
        CHECK(pi_.p20 == 2.0 * pd.p20);  // algebraic identity, exact in fp
        CHECK(pi_.p02 == 2.0 * pd.p02);
        CHECK(std::abs(pi_.p11 - pd.p11 - interference_term(u)) <
              1e-15 * std::max(1.0, pd.p11));
    }
}

TEST_CASE("unitary closure: post-selected probabilities sum to one") {
    std::mt19937 rng(402);
    for (int i = 0; i < 200; ++i) {
        const Mat2 u = oracles::random_unitary(rng);
        CHECK(std::abs(two_photon_probs_indist(u).sum() - 1.0) < 1e-12);
        CHECK(std::abs(two_photon_probs_dist(u).sum() - 1.0) < 1e-12);
    }
}

TEST_CASE("probabilities stay in range and sums stay below one") {
    std::mt19937 rng(403);
    for (int i = 0; i < 300; ++i) {
        const Mat2 u = oracles::random_subunitary(rng, 0.999);
        for (const TwoPhotonProbs& p :
             {two_photon_probs_indist(u), two_photon_probs_dist(u)}) {
            for (double v : {p.p20, p.p11, p.p02}) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
            CHECK(p.sum() <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("hom_curve endpoints, dip, and exact symmetry") {
    const SourceModel src{0.15, 1.0};
    const std::vector<double> delays = {-1.2, -0.9, -0.3, -0.1, 0.0, 0.1, 0.3, 0.9, 1.2};

    const HomCurve dip = hom_curve(splitter_50_50(), src, delays);
    CHECK(std::abs(dip.rates[4]) < 1e-14);  // perfect dip at zero delay
    CHECK(dip.visibility == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dip.rates.front() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(dip.rates.back() == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t i = 0; i < delays.size(); ++i) {
        CHECK(dip.rates[i] == dip.rates[delays.size() - 1 - i]);  // rate(t) == rate(-t)
    }

    // far past the coherence time the photons are distinguishable
    const Mat2 u = propagator({0.26, 0.39, 2.1}, SystemKind::bare);
    const HomCurve c = hom_curve(u, src, delays);
    CHECK(std::abs(c.rates.front() - 1.0) < 1e-6);
    CHECK(c.visibility == doctest::Approx(1.0 - c.rates[4]).epsilon(1e-14));
}

TEST_CASE("hom_curve is flat at the sandwiched EP") {
    const Mat2 u = propagator({0.26, 0.26, 2.1}, SystemKind::sandwiched);
    const auto delays = [] {
        std::vector<double> d(161);
        for (int i = 0; i < 161; ++i) d[i] = -0.8 + 1.6 * i / 160.0;
        return d;
    }();
    const HomCurve c = hom_curve(u, SourceModel{0.15, 0.95}, delays);
    for (double rate : c.rates) CHECK(std::abs(rate - 1.0) <= 1e-10);
    CHECK(std::abs(c.visibility) <= 1e-10);
}

TEST_CASE("hom_curve rejects a degenerate normalization") {
    const Mat2 u{1.0, 0.0, 0.0, 0.0};  // p11_dist = 0, sigma_max = 1
    CHECK_THROWS_AS(hom_curve(u, SourceModel{0.15, 1.0}, std::vector<double>{0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(visibility(u, 1.0), std::domain_error);
}

TEST_CASE("SourceModel validates its parameters") {
    CHECK_THROWS_AS(SourceModel(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(SourceModel(-1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(SourceModel(0.15, -0.1), std::domain_error);
    CHECK_THROWS_AS(SourceModel(0.15, 1.1), std::domain_error);
}

TEST_CASE("visibility limits: textbook dip, EP null") {
    CHECK(visibility(splitter_50_50(), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double z : {0.5, 2.1, 4.0}) {
        CHECK(std::abs(visibility(propagator({0.26, 0.26, z}, SystemKind::sandwiched),
                                  0.95)) <= 1e-10);
    }
}

TEST_CASE("bare-coupler visibility at the deepest loss sample") {
    // At the nominal device parameters (0.26 /cm, 2.1 cm) the bare coupler
    // still shows a dip at gamma = 0.63: the J sign flip sits near
    // gamma/kappa = 3.8 for this length. The oracle value pins that down.
    const Mat2 u = propagator({0.26, 0.63, 2.1}, SystemKind::bare);
    const TwoPhotonProbs pd = oracles::expand_two_photon_dist(u);
    const double j = oracles::expand_two_photon_indist(u).p11 - pd.p11;
    const double v_oracle = -j / pd.p11;
    CHECK(visibility(u, 1.0) == doctest::Approx(v_oracle).epsilon(1e-12));
    CHECK(visibility(u, 1.0) == doctest::Approx(0.99438158362481166).epsilon(1e-12));

    // A peak at this loss level needs the 50/50 geometry: with
    // kappa z = pi/4 the flip happens inside the sampled loss range and
    // gamma = 0.63 anti-bunches.
    const Mat2 u5050 = propagator({0.26, 0.63, idealized_length(0.26)}, SystemKind::bare);
    CHECK(visibility(u5050, 1.0) ==
          doctest::Approx(-0.62635807059417048).epsilon(1e-12));
    CHECK(visibility(u5050, 1.0) < 0.0);
}

TEST_CASE("sandwiched sign law: dip below the EP, peak above, null at it") {
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> zdist(0.05, 6.0);
    for (int i = 0; i < 150; ++i) {
        const double z = zdist(rng);
        for (double ratio : {0.2, 0.5, 0.8, 0.99}) {
            const Mat2 u = propagator({0.26, ratio * 0.26, z}, SystemKind::sandwiched);
            CHECK(visibility(u, 0.95) >= -1e-12);
        }
        for (double ratio : {1.01, 1.3, 1.9, 2.4}) {
            const Mat2 u = propagator({0.26, ratio * 0.26, z}, SystemKind::sandwiched);
            CHECK(visibility(u, 0.95) <= 1e-12);
        }
        CHECK(std::abs(visibility(propagator({0.26, 0.26, z}, SystemKind::sandwiched),
                                  0.95)) <= 1e-10);
    }
}

TEST_CASE("loss avoidance: bunching favors the lossless waveguide") {
    for (double length : {2.1, idealized_length(0.26)}) {
        for (int i = 1; i <= 7; ++i) {
            const double gamma = 0.63 * i / 7.0;
            const Mat2 u = propagator({0.26, gamma, length}, SystemKind::bare);
            const TwoPhotonProbs p = two_photon_probs_indist(u);
            CHECK(p.p20 >= p.p02);
        }
    }
}

TEST_CASE("n_photon_prob reduces to the two-photon formulas") {
    std::mt19937 rng(405);
    for (int i = 0; i < 50; ++i) {
        const Mat2 u = oracles::random_subunitary(rng);
        const CMat m = oracles::to_cmat(u);
        const int one_one[] = {1, 1};
        const int two_zero[] = {2, 0};
        const TwoPhotonProbs p = two_photon_probs_indist(u);
        CHECK(std::abs(n_photon_prob(m, one_one, one_one) - p.p11) < 1e-14);
        CHECK(std::abs(n_photon_prob(m, one_one, two_zero) - p.p20) < 1e-14);
    }
}

TEST_CASE("n_photon_prob on the identity and against the expansion oracle") {
    const CMat id3 = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    const int pattern[] = {1, 1, 0};
    CHECK(n_photon_prob(id3, pattern, pattern) == doctest::Approx(1.0).epsilon(1e-15));

    std::mt19937 rng(406);
    for (int trial = 0; trial < 25; ++trial) {
        // random subunitary 3x3 via scaling by sigma_max
        CMat m(3, std::vector<Complex>(3));
        for (auto& row : m) {
            for (auto& c : row) c = oracles::random_unit_disc(rng);
        }
        const double s = sigma_max(m);
        for (auto& row : m) {
            for (auto& c : row) c *= 0.93 / s;
        }
        const std::vector<int> in = {1, 1, 1};
        const std::vector<std::vector<int>> outputs = {
            {2, 1, 0}, {1, 1, 1}, {3, 0, 0}, {0, 2, 1}};
        for (const std::vector<int>& out : outputs) {
            const double want = oracles::expand_n_photon(m, in, out);
            const double got = n_photon_prob(m, in, out);
            CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, want));
        }
    }
}

TEST_CASE("n_photon_prob vacuum edge case") {
    const CMat id2 = {{1.0, 0.0}, {0.0, 1.0}};
    const int vac[] = {0, 0};
    CHECK(n_photon_prob(id2, vac, vac) == 1.0);
}

TEST_CASE("n_photon_prob input validation") {
    const CMat id2 = {{1.0, 0.0}, {0.0, 1.0}};
    const int a[] = {1, 1};
    const int b[] = {2, 1};
    CHECK_THROWS_AS(n_photon_prob(id2, a, b), std::domain_error);  // sum mismatch
    const int big_in[] = {4, 3};
    const int big_out[] = {3, 4};
    CHECK_THROWS_AS(n_photon_prob(id2, big_in, big_out), std::domain_error);  // > 6
    const int neg_in[] = {-1, 2};
    const int neg_out[] = {1, 0};
    CHECK_THROWS_AS(n_photon_prob(id2, neg_in, neg_out), std::domain_error);
    const CMat id9(9, std::vector<Complex>(9, 0.0));
    const std::vector<int> zeros9(9, 0);
    CHECK_THROWS_AS(n_photon_prob(id9, zeros9, zeros9), std::domain_error);  // M > 8
    const CMat amp = {{2.0, 0.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(n_photon_prob(amp, a, a), std::domain_error);  // not subunitary
}
