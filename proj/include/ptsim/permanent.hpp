#pragma once

#include <vector>

#include "ptsim/mat2.hpp"

namespace ptsim {

/// Small dense complex matrix, row-major rows.
using CMat = std::vector<std::vector<Complex>>;

/// Matrix permanent by Ryser's formula with Gray-code subset iteration,
/// O(2^n * n). Accepts 1 <= n <= 20; larger sizes throw std::domain_error
/// (the cost doubles per row, 20 is already ~2*10^7 products).
///
/// Dispatches to the OpenMP-chunked evaluation for large n. Both routes
/// are deterministic: the parallel one accumulates fixed-size chunk
/// partial sums in chunk order, so the result does not depend on the
/// number of threads.
Complex permanent(const CMat& a);

/// Sequential Gray-code Ryser. Kept as the reference path for tests and
/// benchmarks.
Complex permanent_serial(const CMat& a);

/// Chunked Ryser over OpenMP threads.
Complex permanent_parallel(const CMat& a);

}  // namespace ptsim
