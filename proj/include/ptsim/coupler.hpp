#pragma once

#include <span>
#include <vector>

#include "ptsim/mat2.hpp"

namespace ptsim {

/// Physical parameters of one lossy directional coupler.
///
/// Units: kappa and gamma in 1/cm, length in cm. Mode index 1 is the
/// lossless waveguide (L), mode index 2 the lossy waveguide (R); this
/// convention is fixed everywhere, including output column names.
struct CouplerParams {
    double kappa;   // inter-waveguide coupling rate, > 0
    double gamma;   // loss rate of the lossy waveguide, >= 0
    double length;  // propagation length z, > 0

    CouplerParams(double kappa_per_cm, double gamma_per_cm, double length_cm);
};

enum class SystemKind {
    bare,        // single lossy coupler
    sandwiched,  // lossy coupler between two 50/50 couplers
};

/// H = [[0, kappa], [kappa, -2i gamma]].
/// Hermitian for gamma = 0; the exceptional point sits at gamma = kappa.
Mat2 hamiltonian_bare(const CouplerParams& p);

/// H = [[-i gamma, kappa - gamma], [kappa + gamma, -i gamma]]:
/// asymmetric couplings, symmetric loss. Equal to R H_bare R^-1. The
/// upper coupling kappa - gamma vanishes at the exceptional point and
/// changes sign above it.
Mat2 hamiltonian_sandwiched(const CouplerParams& p);

Mat2 hamiltonian(const CouplerParams& p, SystemKind kind);

/// The 50/50 beam-splitter rotation (1/sqrt2)[[1, -i], [-i, 1]]; unitary,
/// and equal to the lossless bare propagator at kappa*z = pi/4.
Mat2 rotation_r();

/// Propagator U(z) = exp(-i H z) for the chosen system.
///
/// Sign convention: we integrate i dpsi/dz = H psi, so U = exp(-iHz) and
/// the lossy mode damps as e^{-gamma z}; the propagator is subunitary for
/// every gamma >= 0, z >= 0.
Mat2 propagator(const CouplerParams& p, SystemKind kind);

/// One sweep row of the bare-coupler eigenvalue spectrum.
struct SpectrumRow {
    double gamma_over_kappa = 0.0;
    Complex lambda1{};  // branch continuing from +kappa at gamma = 0
    Complex lambda2{};
};

/// Eigenvalues of H_bare over a loss sweep, sorted by branch continuity:
/// the first grid point is seeded with lambda1 = the eigenvalue of larger
/// real part (+sqrt(kappa^2-gamma^2) below the EP), and each subsequent
/// point takes the pairing closest to the previous one.
/// Throws std::domain_error on an empty sweep.
std::vector<SpectrumRow> eigen_spectrum(std::span<const double> gammas, double kappa);

/// Coupler length that makes the lossless device an exact 50/50 splitter,
/// kappa * z = pi/4.
double idealized_length(double kappa);

}  // namespace ptsim
