#pragma once

#include "ptsim/exec.hpp"
#include "ptsim/sweep.hpp"

namespace ptsim {

/// Eigenvalue spectrum of the bare lossy coupler vs loss, kappa-normalized:
/// columns (gamma_over_kappa, re_l1, re_l2, im_l1, im_l2), branches sorted
/// by continuity along the sweep.
SweepTable run_fig2b(double kappa, std::span<const double> gamma_grid,
                     Exec exec = Exec::parallel);

/// Two-photon output statistics of the bare coupler vs loss: columns
/// (gamma, p20_indist, p11_indist, p02_indist, p20_dist, p11_dist,
/// p02_dist) under the spec's normalization. Requires kind = bare.
SweepTable run_fig3bcd(const SweepSpec& spec, Exec exec = Exec::parallel);

/// HOM delay scans of the bare coupler, one normalized-rate column per
/// loss sample over the shared delay grid. Normalization is forced to
/// dist_rate (coincidences relative to the distinguishable rate).
SweepTable run_fig3e(const SweepSpec& spec, Exec exec = Exec::parallel);

/// Same as run_fig3e for the sandwiched system.
SweepTable run_fig4b(const SweepSpec& spec, Exec exec = Exec::parallel);

/// HOM visibility vs loss-to-coupling ratio for the bare and sandwiched
/// systems: columns (gamma_over_kappa, visibility_bare,
/// visibility_sandwiched). The gamma grid must cross gamma = kappa.
SweepTable run_fig4c(const SweepSpec& spec, Exec exec = Exec::parallel);

SweepTable run_figure(FigureId figure, const SweepSpec& spec,
                      Exec exec = Exec::parallel);

}  // namespace ptsim
