#include "qmf/quadrature.hpp"

#include <cmath>
#include <vector>

namespace qmf {

namespace {

// Doubling trapezoid over t in R after a change of variables encoded in
// `node`: node(t) returns f(x(t)) * x'(t). Shared driver for all rules.
struct TrapezoidDriver {
    std::function<Cplx(double)> node;  // double abscissas suffice
    double h0 = 1.0;
    double tmax = 8.0;

    QuadResult run(const Real& tol, const QuadratureConfig& cfg) {
        QuadResult res;
        Real breakeps = tol * pow10(-4);
        Cplx acc = node(0.0);  // running sum of node values at current spacing
        long evals = 1;
        double h = h0;
        for (int side = 0; side < 2; ++side) {
            int quiet = 0;
            for (long j = 1;; ++j) {
                double t = (side ? -1.0 : 1.0) * h * (double)j;
                if (std::abs(t) > tmax) break;
                Cplx g = node(t);
                ++evals;
                acc += g;
                if (abs(g) < breakeps) { if (++quiet >= 3) break; }
                else quiet = 0;
                if (evals > cfg.max_evals) { res.evals = evals; return res; }
            }
        }
        Cplx integral = acc * Real(h);
        Real err = abs(integral) + Real(1L);
        for (int level = 1; level <= cfg.max_levels; ++level) {
            h *= 0.5;
            for (int side = 0; side < 2; ++side) {
                int quiet = 0;
                for (long j = 1;; j += 2) {
                    double t = (side ? -1.0 : 1.0) * h * (double)j;
                    if (std::abs(t) > tmax) break;
                    Cplx g = node(t);
                    ++evals;
                    acc += g;
                    if (abs(g) < breakeps) { if (++quiet >= 3) break; }
                    else quiet = 0;
                    if (evals > cfg.max_evals) { res.evals = evals; return res; }
                }
            }
            Cplx next = acc * Real(h);
            err = abs(next - integral);
            integral = next;
            Real ref = abs(integral);
            if (ref < Real(1e-300)) ref = Real(1e-300);
            if (err < tol * ref || err < breakeps) {
                res.value = integral;
                res.err_est = err;
                res.evals = evals;
                res.converged = true;
                return res;
            }
        }
        res.value = integral;
        res.err_est = err;
        res.evals = evals;
        return res;
    }
};

} // namespace

QuadResult quad_tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                          const Real& tol, const QuadratureConfig& cfg) {
    Real mid = (a + b) / 2L;
    Real halfw = (b - a) / 2L;
    TrapezoidDriver drv;
    drv.h0 = 1.0;
    drv.tmax = 6.5;
    Real halfpi = pi() / 2L;
    drv.node = [&, halfpi](double t) -> Cplx {
        Real tr(t);
        Real sh = halfpi * sinh(tr);
        Real ch = exp(sh), chm = exp(-sh);
        Real den = (ch + chm) / 2L;  // cosh(pi/2 sinh t)
        Real tanh_v = ((ch - chm) / 2L) / den;
        Real x = mid + halfw * tanh_v;
        if (x <= a || x >= b) return Cplx(0L);
        Real w = halfw * halfpi * cosh(tr) / (den * den);
        return f(x) * w;
    };
    return drv.run(tol, cfg);
}

QuadResult quad_exp_sinh(const Integrand& f, const Real& scale, const Real& tol,
                         const QuadratureConfig& cfg) {
    TrapezoidDriver drv;
    drv.h0 = 1.0;
    drv.tmax = 7.5;
    Real halfpi = pi() / 2L;
    drv.node = [&, halfpi](double t) -> Cplx {
        Real tr(t);
        Real u = halfpi * sinh(tr);
        Real x = scale * exp(u);
        Real w = x * halfpi * cosh(tr);
        return f(x) * w;
    };
    return drv.run(tol, cfg);
}

QuadResult quad_line(const Integrand& f, const Real& tol, const QuadratureConfig& cfg) {
    TrapezoidDriver drv;
    drv.h0 = 0.5;
    drv.tmax = 64.0;
    drv.node = [&](double t) -> Cplx { return f(Real(t)); };
    return drv.run(tol, cfg);
}

Cplx quad_must(const QuadResult& r, const char* what) {
    if (!r.converged)
        throw NumericalError(std::string("quadrature budget exceeded in ") + what);
    return r.value;
}

} // namespace qmf
