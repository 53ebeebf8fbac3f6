#pragma once

#include <span>
#include <vector>

#include "ptsim/mat2.hpp"
#include "ptsim/permanent.hpp"

namespace ptsim {

/// Post-selected two-photon outcome probabilities for a |1,1> input:
/// p20 = both photons in mode 1 (lossless), p11 = one per mode,
/// p02 = both in mode 2 (lossy). Unnormalized, i.e. relative to the full
/// input; the three sum to 1 only for a unitary transformation.
struct TwoPhotonProbs {
    double p20 = 0.0;
    double p11 = 0.0;
    double p02 = 0.0;

    double sum() const { return p20 + p11 + p02; }
};

/// Gaussian mutual-coherence model of the photon-pair source:
/// overlap f(tau) = exp(-(tau/tau_c)^2), scaled by the peak
/// indistinguishability v_max.
struct SourceModel {
    double tau_c_ps;  // coherence time, ps, > 0
    double v_max;     // peak indistinguishability in [0, 1]

    SourceModel(double tau_c_ps, double v_max);
};

/// Normalized coincidence rate vs photon time delay.
struct HomCurve {
    std::vector<double> delays_ps;
    std::vector<double> rates;  // normalized to the distinguishable rate
    double visibility = 0.0;    // 1 - rate(0); > 0 is a dip, < 0 a peak
};

/// Quantum (permanent-rule) outcome probabilities for two
/// indistinguishable photons entering one per mode:
///   p20 = 2|U11 U12|^2, p02 = 2|U21 U22|^2, p11 = |U11 U22 + U12 U21|^2.
/// Requires a physical (subunitary) transformation; sigma_max above
/// 1 + 1e-9 throws std::domain_error.
TwoPhotonProbs two_photon_probs_indist(const Mat2& u);

/// Classical routing of two distinguishable photons, one per input mode:
///   p20 = |U11|^2 |U12|^2, p02 = |U21|^2 |U22|^2,
///   p11 = |U11 U22|^2 + |U12 U21|^2.
/// No bunching factor 2: two distinct photons in one mode are a
/// distinguishable compound event.
TwoPhotonProbs two_photon_probs_dist(const Mat2& u);

/// Two-photon interference term J = 2 Re[(U11 U22) conj(U12 U21)];
/// p11_indist = p11_dist + J. Negative J means destructive interference
/// in the anti-bunched output (HOM dip), positive J a peak.
double interference_term(const Mat2& u);

/// HOM curve rate(tau) = 1 + v_max f(tau) J / p11_dist over the given
/// delays. Throws std::domain_error when p11_dist vanishes (degenerate
/// normalization).
HomCurve hom_curve(const Mat2& u, const SourceModel& src, std::span<const double> delays_ps);

/// HOM visibility V = -v_max J / p11_dist = 1 - rate(0).
double visibility(const Mat2& u, double v_max);

/// General post-selected n-photon transition probability
///   |perm(U_sub)|^2 / (prod in_i! * prod out_j!)
/// where U_sub repeats column j of U in_j times and row i out_i times.
/// Limits: sum of pattern <= 6 photons, M <= 8 modes; pattern sums must
/// match. Violations throw std::domain_error.
double n_photon_prob(const CMat& u, std::span<const int> input_pattern,
                     std::span<const int> output_pattern);

/// Largest singular value of a small square matrix (cyclic Jacobi on
/// U^dagger U). Used for the physicality preconditions.
double sigma_max(const CMat& u);

}  // namespace ptsim
