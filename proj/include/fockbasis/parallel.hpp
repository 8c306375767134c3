#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fockbasis {

// Every kernel below exists in a serial reference form and an OpenMP form;
// tests assert they agree, the bench target compares them.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Runs fn(i) for i in [0, n). Parallel tasks must write to disjoint slots;
// result ordering is the caller's index order, never the schedule order.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& fn) {
    if (exec == Exec::Parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace fockbasis
