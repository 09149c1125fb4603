#pragma once

#include <cstddef>
#include <functional>

#include "qmf/real.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmf {

enum class ExecMode { serial, openmp };

inline ExecMode& exec_mode() {
    static ExecMode m = ExecMode::openmp;
    return m;
}

// Index-parallel loop over independent work items. Each item computes its own
// values, so results are identical in both modes; the worker threads inherit
// the caller's working precision.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    if (exec_mode() == ExecMode::openmp) {
        mpfr_prec_t prec = working_prec();
#pragma omp parallel
        {
            set_working_prec(prec);
#pragma omp for schedule(dynamic)
            for (long i = 0; i < (long)n; ++i) fn((std::size_t)i);
        }
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

} // namespace qmf
