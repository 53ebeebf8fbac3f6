#include "ptsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ptsim {

namespace {

constexpr double kPassivityTol = 1e-9;
constexpr int kMaxPhotons = 6;
constexpr int kMaxModes = 8;

void require_physical(const Mat2& u, const char* who) {
    if (!is_finite(u)) {
        throw std::domain_error(std::string(who) + ": non-finite transformation");
    }
    if (svals2(u).sigma_max > 1.0 + kPassivityTol) {
        throw std::domain_error(std::string(who) +
                                ": transformation is not subunitary (sigma_max > 1)");
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

SourceModel::SourceModel(double tau_c, double v) : tau_c_ps(tau_c), v_max(v) {
    if (!(std::isfinite(tau_c_ps) && tau_c_ps > 0.0)) {
        throw std::domain_error("SourceModel: tau_c must be finite and > 0");
    }
    if (!(std::isfinite(v_max) && v_max >= 0.0 && v_max <= 1.0)) {
        throw std::domain_error("SourceModel: v_max must lie in [0, 1]");
    }
}

TwoPhotonProbs two_photon_probs_indist(const Mat2& u) {
    require_physical(u, "two_photon_probs_indist");
    TwoPhotonProbs p;
    p.p20 = 2.0 * std::norm(u.a11) * std::norm(u.a12);
    p.p02 = 2.0 * std::norm(u.a21) * std::norm(u.a22);
    p.p11 = std::norm(u.a11 * u.a22 + u.a12 * u.a21);
    return p;
}

TwoPhotonProbs two_photon_probs_dist(const Mat2& u) {
    require_physical(u, "two_photon_probs_dist");
    TwoPhotonProbs p;
    p.p20 = std::norm(u.a11) * std::norm(u.a12);
    p.p02 = std::norm(u.a21) * std::norm(u.a22);
    p.p11 = std::norm(u.a11 * u.a22) + std::norm(u.a12 * u.a21);
    return p;
}

double interference_term(const Mat2& u) {
    require_physical(u, "interference_term");
    const Complex a = u.a11 * u.a22;
    const Complex b = u.a12 * u.a21;
    return 2.0 * (a.real() * b.real() + a.imag() * b.imag());  // 2 Re[a conj(b)]
}

double visibility(const Mat2& u, double v_max) {
    const double p11_dist = two_photon_probs_dist(u).p11;
    if (p11_dist <= 0.0) {
        throw std::domain_error("visibility: p11_dist vanishes, normalization degenerate");
    }
    return -v_max * interference_term(u) / p11_dist;
}

HomCurve hom_curve(const Mat2& u, const SourceModel& src, std::span<const double> delays_ps) {
    const double p11_dist = two_photon_probs_dist(u).p11;
    if (p11_dist <= 0.0) {
        throw std::domain_error("hom_curve: p11_dist vanishes, normalization degenerate");
    }
    const double j_over = interference_term(u) / p11_dist;

    HomCurve curve;
    curve.delays_ps.assign(delays_ps.begin(), delays_ps.end());
    curve.rates.resize(delays_ps.size());
    for (std::size_t i = 0; i < delays_ps.size(); ++i) {
        const double tau = delays_ps[i];
        if (!std::isfinite(tau)) {
            throw std::domain_error("hom_curve: non-finite delay");
        }
        const double x = tau / src.tau_c_ps;
        curve.rates[i] = 1.0 + src.v_max * std::exp(-x * x) * j_over;
    }
    curve.visibility = -src.v_max * j_over;
    return curve;
}

double sigma_max(const CMat& u) {
    const int m = static_cast<int>(u.size());
    // Hermitian G = U^dagger U, then cyclic Jacobi to its largest eigenvalue.
    std::vector<std::vector<Complex>> g(m, std::vector<Complex>(m));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(u[i].size()) != m) {
            throw std::domain_error("sigma_max: matrix must be square");
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < m; ++k) s += std::conj(u[k][i]) * u[k][j];
            g[i][j] = s;
        }
    }

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) off += std::norm(g[p][q]);
        }
        if (off < 1e-30) break;

        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const Complex gpq = g[p][q];
                if (std::abs(gpq) == 0.0) continue;
                const double app = g[p][p].real();
                const double aqq = g[q][q].real();
                // Complex Jacobi rotation zeroing g[p][q].
                const Complex phase = gpq / std::abs(gpq);
                const double zeta = (aqq - app) / (2.0 * std::abs(gpq));
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = c * t * phase;

                for (int k = 0; k < m; ++k) {
                    const Complex gkp = g[k][p];
                    const Complex gkq = g[k][q];
                    g[k][p] = c * gkp - std::conj(s) * gkq;
                    g[k][q] = s * gkp + c * gkq;
                }
                for (int k = 0; k < m; ++k) {
                    const Complex gpk = g[p][k];
                    const Complex gqk = g[q][k];
                    g[p][k] = c * gpk - s * gqk;
                    g[q][k] = std::conj(s) * gpk + c * gqk;
                }
            }
        }
    }

    double lam = 0.0;
    for (int i = 0; i < m; ++i) lam = std::max(lam, g[i][i].real());
    return std::sqrt(std::max(lam, 0.0));
}

double n_photon_prob(const CMat& u, std::span<const int> input_pattern,
                     std::span<const int> output_pattern) {
    const int m = static_cast<int>(u.size());
    if (m < 1 || m > kMaxModes) {
        throw std::domain_error("n_photon_prob: mode count must be in [1, 8]");
    }
    if (static_cast<int>(input_pattern.size()) != m ||
        static_cast<int>(output_pattern.size()) != m) {
        throw std::domain_error("n_photon_prob: pattern length must equal mode count");
    }

    int n_in = 0, n_out = 0;
    for (int v : input_pattern) {
        if (v < 0) throw std::domain_error("n_photon_prob: negative occupation");
        n_in += v;
    }
    for (int v : output_pattern) {
        if (v < 0) throw std::domain_error("n_photon_prob: negative occupation");
        n_out += v;
    }
    if (n_in != n_out) {
        throw std::domain_error("n_photon_prob: input and output photon numbers differ");
    }
    if (n_in > kMaxPhotons) {
        throw std::domain_error("n_photon_prob: more than 6 photons");
    }
    if (sigma_max(u) > 1.0 + kPassivityTol) {
        throw std::domain_error("n_photon_prob: transformation is not subunitary");
    }
    if (n_in == 0) return 1.0;  // vacuum stays vacuum under post-selection

    // U_sub repeats column j in_j times and row i out_i times.
    std::vector<int> cols, rows;
    for (int j = 0; j < m; ++j) cols.insert(cols.end(), input_pattern[j], j);
    for (int i = 0; i < m; ++i) rows.insert(rows.end(), output_pattern[i], i);

    CMat sub(n_in, std::vector<Complex>(n_in));
    for (int r = 0; r < n_in; ++r) {
        for (int c = 0; c < n_in; ++c) sub[r][c] = u[rows[r]][cols[c]];
    }

    double denom = 1.0;
    for (int v : input_pattern) denom *= factorial(v);
    for (int v : output_pattern) denom *= factorial(v);
    return std::norm(permanent(sub)) / denom;
}

}  // namespace ptsim
