#pragma once

#include <cstddef>

namespace ptsim {

/// Execution policy for sweep kernels. Rows of a sweep are independent
/// and written by index, so both policies produce bit-identical tables;
/// `serial` is kept as the reference path for tests and benchmarks.
enum class Exec {
    serial,
    parallel,
};

template <typename F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            body(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
    }
}

}  // namespace ptsim
