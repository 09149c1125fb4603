#pragma once

#include <map>

#include "qmf/laplace.hpp"

namespace qmf {

// h_gamma(z) = g(z) - (class multiplier) g|_kappa gamma(z). For the periodic
// classes the involution is the pair map W_N f(z) = (sqrt N z)^{-1} f*(-1/(N z))
// with N the pair level (1 for the divisor series, 2 for sigma).
Cplx obstruction_direct(const FormPtr& g, const GroupElement& gamma, const Cplx& z,
                        const PrecisionContext& ctx);

// Companion involution value W_N applied at z.
Cplx pair_slash(const FormPtr& g, const Cplx& z, const PrecisionContext& ctx);

// h_gamma through the directional Borel--Laplace sum of the series at the
// cusp, continued over the cut plane by choosing the direction inside the
// pole-free sector; the divisor series adds its contour correction and the
// constant-term slash.
Cplx obstruction_borel(const FormPtr& g, const BorelData& B, const Cplx& z, long M,
                       const PrecisionContext& ctx, Real* err_out = nullptr);

// ((-2 pi i)^{k-1}/Gamma(k-1)) Int_{-d/c}^{i oo} f(tau) (tau - z)^{k-2} d tau
// along a ray from the cusp chosen to avoid the branch cut of (tau - z)^{k-2}.
Cplx obstruction_integral(const FormPtr& g, const GroupElement& gamma, const Cplx& z,
                          const PrecisionContext& ctx, Real* err_out = nullptr);

// Coefficients ((-2 pi i)^{k-1}/Gamma(k-1)) C(k-2, n) i^{n-1} Lambda(f; n+1).
std::vector<Cplx> period_polynomial(const FormPtr& f, long k, const PrecisionContext& ctx);

Cplx eval_poly(const std::vector<Cplx>& coeffs, const Cplx& z);

// |odd-part contour - slash comparator| for cusp forms and integer-weight
// Eichler integrals.
Real odd_part_slash_check(const FormPtr& g, const GroupElement& gamma, const Cplx& z, long M,
                          const PrecisionContext& ctx);

struct GridSpec {
    Real x_lo, x_hi;
    Real y_lo, y_hi;
    long nx = 11, ny = 11;
    Real cut_margin;  // exclude |Im z| below this; default 1e-3
    GridSpec() : x_lo(-1L), x_hi(1L), y_lo(Real(-1L) / 2L), y_hi(Real(1L) / 2L),
                 cut_margin(pow10(-3)) {}
};

struct ObstructionPoint {
    Cplx z;
    std::map<std::string, Cplx> values;
    std::map<std::string, Real> errs;
    Real max_discrepancy;
    bool ok = true;
    std::string note;
};

struct ObstructionReport {
    GroupElement gamma;
    Rat kappa;
    std::string form;
    std::vector<ObstructionPoint> points;
    Real max_pairwise;        // worst cross-method discrepancy over the grid
    Real continuity_jump;     // max |borel(x+i delta) - borel(x-i delta)| off the cut
    long failures = 0;
};

// Evaluates the requested methods on a grid straddling the real axis and
// reports pairwise discrepancies plus the cross-axis continuity of the Borel
// route. methods is a subset of {"direct","borel","integral","polynomial"}.
ObstructionReport cutplane_scan(const FormPtr& g, const GroupElement& gamma,
                                const GridSpec& grid, const std::vector<std::string>& methods,
                                long M, const PrecisionContext& ctx);

} // namespace qmf
