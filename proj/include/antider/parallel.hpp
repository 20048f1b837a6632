#pragma once

#include <cstddef>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "antider/precision.hpp"

namespace antider {

// Every heavy scan runs in one of two modes: a plain serial loop (the
// reference implementation, used by the consistency tests) or an OpenMP
// loop over the same index space.  Bodies write only to their own slot of a
// preallocated output array; reductions happen serially afterwards, so both
// modes produce bit-identical results.
enum class Exec { serial, parallel };

inline Exec exec_from_string(const std::string& s) {
    return s == "serial" ? Exec::serial : Exec::parallel;
}

template <class F>
void parallel_for(std::size_t n, Exec mode, F&& body) {
#ifdef _OPENMP
    if (mode == Exec::parallel) {
        #pragma omp parallel
        {
            apply_thread_precision();
            #pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(n); ++i)
                body(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline double wall_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return 0.0;
#endif
}

} // namespace antider
