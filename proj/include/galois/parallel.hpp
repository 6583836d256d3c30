#pragma once

#include <cstddef>

#ifdef GALOIS_HAVE_OPENMP
#include <omp.h>
#endif

namespace galois::par {

namespace detail {
inline bool g_enabled = true;
inline int g_threads = 0;
}  // namespace detail

// Process toggle for the OpenMP kernels. Results must be identical either
// way; tests and the CLI determinism check flip this switch.
inline void set_enabled(bool on) { detail::g_enabled = on; }
inline bool enabled() { return detail::g_enabled; }

// Thread count hint (0 = runtime default). Only meaningful with OpenMP.
inline void set_threads(int n) { detail::g_threads = n; }
inline int threads() { return detail::g_threads; }

// Static-schedule parallel loop over [0, n). The body must write only to
// slots addressed by its own index so the result is schedule-independent.
template <class Body>
void for_index(std::size_t n, Body&& body) {
#ifdef GALOIS_HAVE_OPENMP
    if (enabled() && n > 1) {
        const int nt = threads();
#pragma omp parallel for schedule(static) num_threads(nt > 0 ? nt : omp_get_max_threads())
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

// Serial reference for the same loop shape; kept so tests can compare the
// parallel kernels against it directly.
template <class Body>
void for_index_serial(std::size_t n, Body&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace galois::par
