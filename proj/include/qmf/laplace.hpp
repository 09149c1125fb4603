#pragma once

#include "qmf/borel.hpp"

namespace qmf {

struct RaySpec {
    Real theta;
    Real epsilon;  // angular offset for the lateral rays; default pi/64

    RaySpec() : theta(0L), epsilon(pi() / 64L) {}
    explicit RaySpec(Real th) : theta(std::move(th)), epsilon(pi() / 64L) {}
    RaySpec(Real th, Real eps) : theta(std::move(th)), epsilon(std::move(eps)) {}
};

struct LapResult {
    Cplx value;
    Real err_est;
};

// z^{-kappa} Int_0^{e^{i theta} oo} e^{-u/z} psi(u) u^{kappa-1} du by
// double-exponential quadrature; requires Re(z e^{-i theta}) > 0.
LapResult laplace_dir(const std::function<Cplx(const Cplx&)>& psi, const Rat& kappa,
                      const Real& theta, const Cplx& z, const PrecisionContext& ctx,
                      const QuadratureConfig& qcfg = {});

// S_kappa^theta applied to the series behind B: exact head plus quadrature of
// the continued pole part. theta must avoid the Stokes rays.
LapResult borel_laplace_sum(const BorelData& B, const Rat& kappa, const Real& theta,
                            const Cplx& z, long M, const PrecisionContext& ctx);

// z^{-kappa} sum over the ray's poles of S_omega omega^{kappa-1} e^{-omega/z},
// truncated at M poles with a geometric tail bound.
LapResult discontinuity(const BorelData& B, const Rat& kappa, const Real& theta, const Cplx& z,
                        long M, const PrecisionContext& ctx);

struct MedianResult {
    Cplx value;
    Real err_est;
    Cplx lateral_plus, lateral_minus;
    Real decomp_residual;  // |(S+ + S-)/2 - S- - disc/2| consistency check
};

// Average of the two lateral sums flanking theta, cross-checked against the
// one-sided-plus-half-discontinuity representations.
MedianResult median_sum(const BorelData& B, const Real& theta, const Cplx& z,
                        const RaySpec& ray, long M, const PrecisionContext& ctx);

// (1/(2 sqrt(zeta))) Int_Gamma e^{-u/zeta} ghat(u) du/sqrt(u) with
// ghat(u) = (1/sqrt pi) sum b_mu zeta_c^{-d mu} e^{-sqrt(8 pi i mu u)},
// realized on the Gaussian line eta = eps + i s, u = eta^2/(8 pi i).
LapResult gaussian_kernel_sum(const FormPtr& g, const GroupElement& gamma, const Cplx& z,
                              const PrecisionContext& ctx);

// (1/(2 sqrt z)) Int_Gamma e^{-u/z} (-4 + 2 log(8 pi i u))/(2 pi i u) du/sqrt(pi u)
// on the two-ray-plus-arc contour with the square-root branch tracked.
LapResult eisenstein_log_correction(const Cplx& z, const PrecisionContext& ctx);

// Lateral difference (S^{theta-} - S^{theta+}) of the odd-part series of g,
// evaluated through the shifted pole representation; equals the weight-k slash
// for cusp forms and integer-weight Eichler integrals.
LapResult odd_part_contour(const FormPtr& g, const GroupElement& gamma, const Cplx& z,
                           long M, const PrecisionContext& ctx);

} // namespace qmf
