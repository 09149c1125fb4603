#pragma once

#include "qmf/forms.hpp"
#include "qmf/quadrature.hpp"

namespace qmf {

struct TwistedLSeries {
    FormPtr form;
    Rat twist;  // -d/c: the character value at exponent mu is e^{2 pi i twist mu}

    // abscissa of absolute convergence from the growth model
    Real abscissa() const { return form->growth_exponent.to_real() + Real(1L); }
};

// One column t^{power} log(t)^{log_pow} of the extrapolation model.
struct BasisTerm {
    Real power;
    int log_pow = 0;
};

struct LValueOptions {
    Real t0 = Real(1L) / 100L;     // ladder start
    int order = 6;                 // Richardson order
    int points = 8;                // ladder length
    bool allow_deep = false;       // permit rho below abscissa-1 (entire continuations)
    std::vector<BasisTerm> basis;  // extra non-polynomial model terms of the damped sum
    Real cut_override;             // absolute truncation for ladder sums (0 = derive from ctx)
};

struct LValue {
    Cplx value;
    Real err_est;
    std::string method;
};

// Dirichlet value sum a(mu) e^{2 pi i twist mu} mu^{-rho}: direct summation with
// a rigorous tail bound where affordable, otherwise the Abel t-ladder
// t_j = t0 2^{-j} with Richardson extrapolation (also used to regularize
// below the abscissa).
LValue l_series_value(const TwistedLSeries& L, const Cplx& rho, const PrecisionContext& ctx,
                      const LValueOptions& opt = {});

// Ladder values for a run of consecutive shifts: out[k] = value at rho0 + k.
std::vector<LValue> l_series_run(const TwistedLSeries& L, const Cplx& rho0, int count,
                                 const PrecisionContext& ctx, const LValueOptions& opt = {});

// Lambda(f, zeta_c^{-d}; rho) = c^rho Int_0^oo f(it - d/c) t^{rho-1} dt with the
// split at t = 1/c; the small-t piece is mapped to (1/c, oo) by t -> 1/(c^2 t).
// With reflect_small_t the mapped integrand is rewritten through the modular
// transformation attached to gamma (requires a known multiplier).
Cplx lambda_completed(const FormSpec& f, const GroupElement& gamma, const Cplx& rho,
                      const PrecisionContext& ctx, bool reflect_small_t = false);

// Right-hand side of the functional equation:
// i^{-k} w(gamma) Lambda(f, zeta_c^{a}; k - rho), w the slash multiplier.
Cplx lambda_reflect(const FormSpec& f, const GroupElement& gamma, const Cplx& rho,
                    const PrecisionContext& ctx);

// Matrix with cusp a/c used on the reflected side: (-d, b; c, -a).
GroupElement reflected_gamma(const GroupElement& gamma);

// zeta(rho)^2 by eta acceleration for Re > 0 and the functional equation
// pi^{-rho} Gamma(rho/2)^2 zeta^2(rho) = pi^{rho-1} Gamma((1-rho)/2)^2 zeta^2(1-rho).
Cplx zeta_squared(const Cplx& rho, const PrecisionContext& ctx);

struct MaassLSeries {
    FormPtr plus;    // A_mu at positive exponents
    FormPtr minus;   // companion stream: A_{-mu'} = minus_scale * coefficient
    Rat minus_scale;
    Rat spectral_s;  // fixed 1/2

    static MaassLSeries sigma_pair();
    static MaassLSeries eisenstein_pair();  // A_{+-m} = d(m): L_1 = 0, L_0 = 2 zeta^2
};

// gamma_s(rho) = (1/(4 pi^rho)) Gamma((rho-s+1/2)/2) Gamma((rho+s-1/2)/2) at s = 1/2.
Cplx maass_gamma_factor(const Cplx& rho, const PrecisionContext& ctx);

// L_eps(rho) = sum (A_mu + (-1)^eps A_{-mu}) mu^{-rho}, regularized as needed.
LValue maass_L(const MaassLSeries& M, int eps, const Cplx& rho, const PrecisionContext& ctx,
               const LValueOptions& opt = {});

// Consecutive-shift run of maass_L values (shared ladder work).
std::vector<LValue> maass_L_run(const MaassLSeries& M, int eps, const Cplx& rho0, int count,
                                const PrecisionContext& ctx, const LValueOptions& opt = {});

// L_eps through Lambda_eps(1-rho) = (-1)^eps Lambda_eps(rho); inner_opt
// controls the far-side evaluation (its damped sums may need polar terms).
Cplx maass_reflect(const MaassLSeries& M, int eps, const Cplx& rho, const PrecisionContext& ctx,
                   const LValueOptions& inner_opt = {});

// Extrapolation of F(t_j) -> t = 0: Neville on the polynomial model, or a
// linear solve when extra basis terms are supplied.
Cplx extrapolate_to_zero(const std::vector<Real>& ts, const std::vector<Cplx>& Fs, int order,
                         const std::vector<BasisTerm>& basis, Real* err_out);

} // namespace qmf
