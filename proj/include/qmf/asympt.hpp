#pragma once

#include <optional>

#include "qmf/lseries.hpp"

namespace qmf {

struct GevreyCertificate {
    Real A;
    Real B;
    long n_from = 0, n_to = 0;
    bool convergent = false;  // ratio test indicates B -> 0 (convergent series)
};

// Coefficients of the expansion in powers of (z + d/c), with the optional
// Eisenstein log head alpha (log(-2 pi i z) - gamma_E)/(2 pi i z).
struct AsymptoticSeries {
    Rat base_point;  // -d/c
    GroupElement gamma;
    bool direction_reversed = false;  // input had c < 0: resum along theta = pi
    FormClass source = FormClass::generic;
    Rat shift;  // canonical Borel shift
    long ell = 0;
    std::vector<Cplx> coeffs;
    bool has_log_head = false;
    Real log_alpha;  // -4 for the divisor series
    std::optional<GevreyCertificate> cert;

    Cplx head_eval(const Cplx& dz, long upto) const;  // sum_{n<upto} c_n dz^n
    Cplx log_head_eval(const Cplx& dz) const;
    std::string to_json(int digits) const;
};

// Per-class closed-form series at the cusp gamma^{-1}(i oo).
AsymptoticSeries asympt_build(const FormPtr& g, const GroupElement& gamma, long N,
                              const PrecisionContext& ctx);

// Least geometric rate B (within ~1%) with |c_n| <= A B^n n! on the stored range.
GevreyCertificate gevrey_fit(const AsymptoticSeries& phi);

struct SlopeReport {
    std::vector<Real> ts;
    std::vector<Real> log_abs_residual;
    Real slope;
    long n_partial = 0;
};

// Residuals g(x0 + it) - log head - partial sums on the vertical geodesic and
// the least-squares slope of log|r| against log t.
SlopeReport asympt_residual(const FormPtr& g, const AsymptoticSeries& phi,
                            const std::vector<Real>& ts, long n_partial,
                            const PrecisionContext& ctx);

// Scale factor between g's coefficients and (underlying f) a_mu mu^{1-k};
// 1 for honest Eichler integrals, 1/sqrt(120) for the catalog theta tilde.
Real eichler_scale(const FormSpec& g, const FormSpec& f, const Rat& k);

// The cusp form behind an Eichler-class stream (catalog-aware).
FormPtr underlying_cusp_form(const FormPtr& g);

// L(f, zeta_c^{a}; rho) through the completed function at the reflected matrix.
Cplx eichler_l_value(const FormSpec& f, const GroupElement& gamma, const Cplx& rho,
                     const PrecisionContext& ctx);

} // namespace qmf
