#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adic {

// Batch kernels (normal forms of matrix entries, tower windows, per-degree
// rank tables) run through parallel_for. Work items must be independent and
// write only to their own slot, so the parallel schedule and the serial
// reference produce identical results.

bool parallel_enabled();
void set_parallel_enabled(bool on);
int  parallel_threads();

template <typename Fn>
void serial_for(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i)
        fn(i);
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    if (parallel_enabled() && n > 1) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    serial_for(n, fn);
}

} // namespace adic
