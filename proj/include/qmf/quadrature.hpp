#pragma once

#include <functional>

#include "qmf/cplx.hpp"
#include "qmf/context.hpp"

namespace qmf {

struct QuadResult {
    Cplx value;
    Real err_est;
    long evals = 0;
    bool converged = false;
};

struct QuadratureConfig {
    long max_evals = 400000;
    int max_levels = 14;
    // target tolerance; callers usually pass ctx.quad_tol()
};

using Integrand = std::function<Cplx(const Real&)>;

// Double-exponential rule on the finite interval (a, b); integrable endpoint
// singularities allowed.
QuadResult quad_tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                          const Real& tol, const QuadratureConfig& cfg = {});

// Double-exponential rule on (0, oo) with substitution x = scale*exp(pi/2 sinh t).
// Handles x^(kappa-1) behavior at 0 and exponential decay at infinity.
QuadResult quad_exp_sinh(const Integrand& f, const Real& scale, const Real& tol,
                         const QuadratureConfig& cfg = {});

// Plain trapezoid over the whole real line for analytic integrands with
// super-polynomial two-sided decay (used for vertical-line contours).
QuadResult quad_line(const Integrand& f, const Real& tol, const QuadratureConfig& cfg = {});

// Throwing wrapper: NumericalError if the rule did not reach its target.
Cplx quad_must(const QuadResult& r, const char* what);

} // namespace qmf
