#include "ptsim/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace ptsim {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(const Mat2& m, const char* who) {
    if (!is_finite(m)) {
        throw std::domain_error(std::string(who) + ": non-finite matrix entry");
    }
}

}  // namespace

bool is_finite(const Mat2& m) {
    return finite(m.a11) && finite(m.a12) && finite(m.a21) && finite(m.a22);
}

double max_abs(const Mat2& m) {
    return std::max(std::max(std::abs(m.a11), std::abs(m.a12)),
                    std::max(std::abs(m.a21), std::abs(m.a22)));
}

double max_abs_diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

Mat2 inverse(const Mat2& m) {
    const Complex d = det(m);
    if (std::abs(d) == 0.0) {
        throw std::domain_error("inverse: singular matrix");
    }
    const Complex inv_d = 1.0 / d;
    return {m.a22 * inv_d, -m.a12 * inv_d, -m.a21 * inv_d, m.a11 * inv_d};
}

namespace detail {

Complex sinhc(Complex w) {
    if (std::abs(w) < kSinhcSeriesThreshold) {
        // sinh(w)/w = 1 + w^2/6 + w^4/120 + w^6/5040 + ...
        const Complex w2 = w * w;
        return 1.0 + w2 / 6.0 * (1.0 + w2 / 20.0 * (1.0 + w2 / 42.0));
    }
    return std::sinh(w) / w;
}

}  // namespace detail

Mat2 expm2(const Mat2& m, double s) {
    require_finite(m, "expm2");
    if (!std::isfinite(s)) {
        throw std::domain_error("expm2: non-finite scale");
    }

    const Complex half_tr = 0.5 * trace(m);
    const Mat2 a{m.a11 - half_tr, m.a12, m.a21, m.a22 - half_tr};
    const Complex mu = std::sqrt(-det(a));  // mu^2 = -det(A) for traceless A
    const Complex w = mu * s;

    const Complex ch = std::cosh(w);
    const Complex sh_over = s * detail::sinhc(w);  // sinh(mu s)/mu, EP-safe
    const Complex scale = std::exp(s * half_tr);

    return {scale * (ch + sh_over * a.a11), scale * (sh_over * a.a12),
            scale * (sh_over * a.a21), scale * (ch + sh_over * a.a22)};
}

Spectrum2 eig2(const Mat2& m) {
    require_finite(m, "eig2");

    const Complex half_tr = 0.5 * trace(m);
    const Complex disc = half_tr * half_tr - det(m);
    const Complex root = std::sqrt(disc);  // principal branch

    Spectrum2 out;
    out.lambda1 = half_tr + root;
    out.lambda2 = half_tr - root;
    out.discriminant = disc;

    // A coalesced pair is only defective when the matrix is not (close to)
    // a scalar multiple of the identity.
    const double off = std::max(std::max(std::abs(m.a12), std::abs(m.a21)),
                                std::abs(m.a11 - m.a22));
    out.defective = std::abs(disc) <= kEigCoalescenceTol && off > kEigCoalescenceTol;
    return out;
}

Svals2 svals2(const Mat2& m) {
    require_finite(m, "svals2");

    // Eigenvalues of the Gram matrix M^dagger M = [[p, q], [conj q, r]]:
    // (p+r)/2 +- sqrt(((p-r)/2)^2 + |q|^2). The radicand is a sum of
    // non-negative terms, so degenerate singular values (unitary M) come
    // out to full precision; the t^2/4 - |det|^2 form would lose half the
    // digits there.
    const double p = std::norm(m.a11) + std::norm(m.a21);
    const double r = std::norm(m.a12) + std::norm(m.a22);
    const Complex q = std::conj(m.a11) * m.a12 + std::conj(m.a21) * m.a22;
    const double half_gap = 0.5 * (p - r);
    const double root = std::hypot(half_gap, std::abs(q));
    const double lam_max = 0.5 * (p + r) + root;

    Svals2 out;
    out.sigma_max = std::sqrt(std::max(lam_max, 0.0));
    // sigma_min from |det| / sigma_max avoids the cancellation in
    // (p+r)/2 - root for ill-conditioned matrices.
    out.sigma_min = out.sigma_max > 0.0 ? std::abs(det(m)) / out.sigma_max : 0.0;
    return out;
}

}  // namespace ptsim
