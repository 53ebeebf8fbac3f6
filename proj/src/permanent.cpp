#include "ptsim/permanent.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ptsim {

namespace {

constexpr int kMaxN = 20;
// Subset range handled per chunk in the parallel route. Partial sums are
// combined in chunk order, which fixes the result independent of thread
// count.
constexpr std::uint64_t kChunkSize = 1u << 13;
// Below this the chunking overhead dominates.
constexpr int kParallelThreshold = 14;

struct Flat {
    std::array<Complex, kMaxN * kMaxN> a{};
    int n = 0;
};

Flat flatten(const CMat& m) {
    Flat f;
    f.n = static_cast<int>(m.size());
    if (f.n < 1 || f.n > kMaxN) {
        throw std::domain_error("permanent: size must be in [1, 20]");
    }
    for (int i = 0; i < f.n; ++i) {
        if (static_cast<int>(m[i].size()) != f.n) {
            throw std::domain_error("permanent: matrix must be square");
        }
        for (int j = 0; j < f.n; ++j) {
            const Complex c = m[i][j];
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw std::domain_error("permanent: non-finite entry");
            }
            f.a[i * kMaxN + j] = c;
        }
    }
    return f;
}

// Ryser: perm(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij.
// Subsets are visited in Gray-code order over k = first..last (inclusive),
// with row sums seeded from gray(first) and updated incrementally.
Complex ryser_range(const Flat& f, std::uint64_t first, std::uint64_t last) {
    const int n = f.n;
    std::array<Complex, kMaxN> row_sums{};

    std::uint64_t gray = first ^ (first >> 1);
    for (int j = 0; j < n; ++j) {
        if (gray & (std::uint64_t{1} << j)) {
            for (int i = 0; i < n; ++i) row_sums[i] += f.a[i * kMaxN + j];
        }
    }

    Complex acc = 0.0;
    for (std::uint64_t k = first;; ++k) {
        const int bits = std::popcount(gray);
        Complex prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= row_sums[i];
        acc += ((n - bits) % 2 == 0) ? prod : -prod;

        if (k == last) break;
        const std::uint64_t next = k + 1;
        const int j = std::countr_zero(next);
        const std::uint64_t bit = std::uint64_t{1} << j;
        gray ^= bit;
        if (gray & bit) {
            for (int i = 0; i < n; ++i) row_sums[i] += f.a[i * kMaxN + j];
        } else {
            for (int i = 0; i < n; ++i) row_sums[i] -= f.a[i * kMaxN + j];
        }
    }
    return acc;
}

}  // namespace

Complex permanent_serial(const CMat& m) {
    const Flat f = flatten(m);
    const std::uint64_t total = (std::uint64_t{1} << f.n) - 1;
    return ryser_range(f, 1, total);
}

Complex permanent_parallel(const CMat& m) {
    const Flat f = flatten(m);
    const std::uint64_t total = (std::uint64_t{1} << f.n) - 1;
    const std::uint64_t n_chunks = (total + kChunkSize - 1) / kChunkSize;

    std::vector<Complex> partial(n_chunks);
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < static_cast<long long>(n_chunks); ++c) {
        const std::uint64_t first = 1 + static_cast<std::uint64_t>(c) * kChunkSize;
        const std::uint64_t last =
            std::min(total, first + kChunkSize - 1);
        partial[static_cast<std::size_t>(c)] = ryser_range(f, first, last);
    }

    Complex acc = 0.0;
    for (const Complex& p : partial) acc += p;
    return acc;
}

Complex permanent(const CMat& m) {
    if (m.size() >= static_cast<std::size_t>(kParallelThreshold)) {
        return permanent_parallel(m);
    }
    return permanent_serial(m);
}

}  // namespace ptsim
