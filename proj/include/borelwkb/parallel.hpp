#ifndef BORELWKB_PARALLEL_HPP
#define BORELWKB_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace borelwkb {

// Execution mode for the data-parallel kernels. Every parallel kernel has a
// serial path that produces bit-identical results; tests compare the two and
// tools/bench_kernels times them against each other.
enum class Exec { Serial, OpenMP };

inline int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("BOREL_WKB_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return n;
}

// Index loop [0, n). Bodies must write only to their own slots.
template <class F>
void parallel_for(std::size_t n, F&& f, Exec mode = Exec::OpenMP) {
#ifdef _OPENMP
    if (mode == Exec::OpenMP && n > 1 && max_threads() > 1) {
        const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

} // namespace borelwkb

#endif
