#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cgi {

// CGI_THREADS caps the OpenMP thread count for all parallel kernels.
inline void init_threads_from_env() {
#ifdef _OPENMP
    if (const char* s = std::getenv("CGI_THREADS")) {
        const int n = std::atoi(s);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace cgi
