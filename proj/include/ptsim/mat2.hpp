#pragma once

#include <complex>
#include <stdexcept>

namespace ptsim {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major. The workhorse type for
/// Hamiltonians, propagators and basis rotations.
struct Mat2 {
    Complex a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Mat2 operator*(Complex s, const Mat2& a) {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

inline Mat2 operator*(double s, const Mat2& a) { return Complex(s) * a; }

inline Complex trace(const Mat2& m) { return m.a11 + m.a22; }

inline Complex det(const Mat2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

inline Mat2 adjoint(const Mat2& m) {
    return {std::conj(m.a11), std::conj(m.a21), std::conj(m.a12), std::conj(m.a22)};
}

/// Inverse; throws std::domain_error on a singular matrix.
Mat2 inverse(const Mat2& m);

/// Largest elementwise modulus.
double max_abs(const Mat2& m);

/// max_ij |a_ij - b_ij|, the norm used by the similarity identities.
double max_abs_diff(const Mat2& a, const Mat2& b);

bool is_finite(const Mat2& m);

/// Eigenvalue pair of a 2x2 matrix together with the discriminant
/// (tr/2)^2 - det whose vanishing marks eigenvalue coalescence.
/// `defective` is true only when the eigenvalues coalesce and the matrix
/// is not a scalar multiple of the identity, i.e. a genuine Jordan block.
struct Spectrum2 {
    Complex lambda1{}, lambda2{};
    Complex discriminant{};
    bool defective = false;
};

struct Svals2 {
    double sigma_max = 0.0;
    double sigma_min = 0.0;
};

/// Coalescence tolerance on the discriminant, in natural units where the
/// matrix entries are O(1). Well above double rounding noise, far below
/// any parameter grid spacing used in sweeps.
inline constexpr double kEigCoalescenceTol = 1e-9;

/// exp(s*M) in closed form via the traceless split
///   exp(sM) = e^{s tr/2} [cosh(mu s) I + sinhc(mu s) s A],
/// A = M - (tr/2) I and mu^2 = -det(A). Uniformly valid including the
/// defective case mu = 0, where sinh(mu s)/(mu s) is evaluated by its
/// even Taylor series. Throws std::domain_error on non-finite input.
Mat2 expm2(const Mat2& m, double s);

/// Closed-form eigenvalues lambda_{1,2} = tr/2 +- sqrt((tr/2)^2 - det).
Spectrum2 eig2(const Mat2& m);

/// Singular values, descending, from the eigenvalues of M^dagger M.
Svals2 svals2(const Mat2& m);

namespace detail {

/// sinh(w)/w; 4-term even series below |w| = 1e-4 so the removable
/// singularity at w = 0 is exact.
Complex sinhc(Complex w);

inline constexpr double kSinhcSeriesThreshold = 1e-4;

}  // namespace detail

}  // namespace ptsim
