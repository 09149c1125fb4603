#pragma once

#include "qmf/asympt.hpp"

namespace qmf {

struct BorelPole {
    Cplx omega;
    Cplx stokes;  // S_omega; the residue of the transform at omega is -S/(2 pi i)
};

// Head polynomial plus simple poles on finitely many rays. The transform with
// the canonical shift a is evaluated as
//   B_a(phi)(u) = sum_{n<ell} (c_n / Gamma(n+a)) u^n
//               + sum_m r_m (u/omega_m)^ell / (u - omega_m),   r_m = -S_m/(2 pi i),
// and other half-integer shifts go through closed-form kernels.
class BorelData {
public:
    Rat shift;  // canonical a
    long ell = 0;
    std::vector<Cplx> head;  // c_0 .. c_{ell-1} (series coefficients)
    FormClass source = FormClass::generic;
    GroupElement gamma;
    bool direction_reversed = false;
    bool has_log_head = false;  // Eisenstein branch kernel lives in the contour module
    Real log_alpha;

    // tail model: |S_m| <= tail_C |omega_m|^{tail_p}, ray gap >= tail_gap
    Real tail_C, tail_p, tail_gap;

    using PoleGen = std::function<void(std::vector<BorelPole>&, size_t)>;
    void set_pole_generator(PoleGen g) { box->gen = std::move(g); }
    const BorelPole& pole(size_t i) const;
    size_t poles_cached() const;

    std::string to_json(int digits, long npoles) const;

private:
    struct Box {
        std::vector<BorelPole> poles;
        std::mutex mx;
        PoleGen gen;
    };
    std::shared_ptr<Box> box = std::make_shared<Box>();
};

// a_n -> a_n / Gamma(n+kappa); errors when Gamma(n+kappa) is singular.
std::vector<Cplx> borel_shift(const std::vector<Cplx>& coeffs, const Rat& kappa);

// Closed-form continuation of the Borel transform with the per-class pole and
// Stokes data. Types with entire transforms return head-only data.
BorelData borel_continue(const FormPtr& g, const GroupElement& gamma,
                         const PrecisionContext& ctx, long N_head = -1);

// Value of B_kappa(phi) at u using up to M explicit poles; the remaining tail
// is bounded by the growth model and reported, never dropped silently.
Cplx eval_borel(const BorelData& B, const Rat& kappa, const Cplx& u, long M,
                const PrecisionContext& ctx, Real* err_out = nullptr);

// Ordered poles on the ray of angle theta (within 1e-12 angular tolerance).
std::vector<BorelPole> stokes_ray_data(const BorelData& B, const Real& theta, long M);

// Kernel sum_{n>=ell} [Gamma(n+a)/Gamma(n+a+delta)] x^n for half-integer
// offsets delta in {-1/2, 0, 1/2, 1, 3/2}; principal branches, cut on [1, oo).
Cplx borel_kernel(const Rat& a, const Rat& delta, long ell, const Cplx& x);

} // namespace qmf
