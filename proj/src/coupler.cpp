#include "ptsim/coupler.hpp"

#include <cmath>
#include <numbers>

namespace ptsim {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

CouplerParams::CouplerParams(double kappa_per_cm, double gamma_per_cm, double length_cm)
    : kappa(kappa_per_cm), gamma(gamma_per_cm), length(length_cm) {
    if (!(std::isfinite(kappa) && kappa > 0.0)) {
        throw std::domain_error("CouplerParams: kappa must be finite and > 0");
    }
    if (!(std::isfinite(gamma) && gamma >= 0.0)) {
        throw std::domain_error("CouplerParams: gamma must be finite and >= 0");
    }
    if (!(std::isfinite(length) && length > 0.0)) {
        throw std::domain_error("CouplerParams: length must be finite and > 0");
    }
}

Mat2 hamiltonian_bare(const CouplerParams& p) {
    return {0.0, p.kappa, p.kappa, -2.0 * kI * p.gamma};
}

Mat2 hamiltonian_sandwiched(const CouplerParams& p) {
    return {-kI * p.gamma, p.kappa - p.gamma, p.kappa + p.gamma, -kI * p.gamma};
}

Mat2 hamiltonian(const CouplerParams& p, SystemKind kind) {
    return kind == SystemKind::bare ? hamiltonian_bare(p) : hamiltonian_sandwiched(p);
}

Mat2 rotation_r() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {Complex{r, 0.0}, Complex{0.0, -r}, Complex{0.0, -r}, Complex{r, 0.0}};
}

Mat2 propagator(const CouplerParams& p, SystemKind kind) {
    return expm2(-kI * hamiltonian(p, kind), p.length);
}

double idealized_length(double kappa) {
    if (!(std::isfinite(kappa) && kappa > 0.0)) {
        throw std::domain_error("idealized_length: kappa must be finite and > 0");
    }
    return std::numbers::pi / (4.0 * kappa);
}

std::vector<SpectrumRow> eigen_spectrum(std::span<const double> gammas, double kappa) {
    if (gammas.empty()) {
        throw std::domain_error("eigen_spectrum: empty gamma range");
    }
    if (!(std::isfinite(kappa) && kappa > 0.0)) {
        throw std::domain_error("eigen_spectrum: kappa must be finite and > 0");
    }

    std::vector<SpectrumRow> rows(gammas.size());
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        const double g = gammas[i];
        if (!(std::isfinite(g) && g >= 0.0)) {
            throw std::domain_error("eigen_spectrum: gamma must be finite and >= 0");
        }
        // The Hamiltonian is well defined for gamma >= 0 at any length;
        // build it directly to keep z out of the spectrum.
        const Spectrum2 s = eig2(Mat2{0.0, kappa, kappa, -2.0 * kI * g});
        rows[i] = {g / kappa, s.lambda1, s.lambda2};
    }

    // Branch continuity along the sweep: seed with the larger real part
    // (+kappa at gamma = 0), then keep whichever pairing stays closest to
    // the previous point.
    if (std::real(rows[0].lambda1) < std::real(rows[0].lambda2) ||
        (std::real(rows[0].lambda1) == std::real(rows[0].lambda2) &&
         std::imag(rows[0].lambda1) < std::imag(rows[0].lambda2))) {
        std::swap(rows[0].lambda1, rows[0].lambda2);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const Complex p1 = rows[i - 1].lambda1;
        const Complex p2 = rows[i - 1].lambda2;
        const double keep = std::abs(rows[i].lambda1 - p1) + std::abs(rows[i].lambda2 - p2);
        const double swap = std::abs(rows[i].lambda2 - p1) + std::abs(rows[i].lambda1 - p2);
        if (swap < keep) {
            std::swap(rows[i].lambda1, rows[i].lambda2);
        }
    }
    return rows;
}

}  // namespace ptsim
