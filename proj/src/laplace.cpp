#include "qmf/laplace.hpp"

#include <algorithm>
#include <cmath>

namespace qmf {

LapResult laplace_dir(const std::function<Cplx(const Cplx&)>& psi, const Rat& kappa,
                      const Real& theta, const Cplx& z, const PrecisionContext& ctx,
                      const QuadratureConfig& qcfg) {
    ContextScope cs(ctx);
    Cplx eith = polar(Real(1L), theta);
    Cplx w = eith / z;
    if (w.re.sign() <= 0)
        throw PreconditionError("laplace_dir: Re(z e^{-i theta}) must be positive");
    Real km1 = kappa.to_real() - Real(1L);
    auto integrand = [&](const Real& s) -> Cplx {
        Cplx u = eith * s;
        return psi(u) * exp(-(w * s).re) *
               Cplx(cos(-(w * s).im), sin(-(w * s).im)) * pow(s, km1);
    };
    // e^{-sw}: split into modulus and phase to avoid complex exp on the hot path
    auto integrand2 = [&](const Real& s) -> Cplx {
        Cplx u = eith * s;
        Cplx sw = w * s;
        Real m = exp(-sw.re);
        Cplx osc{m * cos(sw.im), -(m * sin(sw.im))};
        return psi(u) * osc * pow(s, km1);
    };
    (void)integrand;
    Real scale = Real(1L) / w.re;
    QuadResult r = quad_exp_sinh(integrand2, scale, ctx.quad_tol(), qcfg);
    if (!r.converged) throw NumericalError("laplace_dir: quadrature budget exceeded");
    Cplx pref = pow(z, -kappa.to_real()) * pow(eith, kappa.to_real());
    return {pref * r.value, r.err_est * abs(pref)};
}

namespace {

// Pole-tail evaluator (head excluded) at shift kappa.
Cplx borel_tail_eval(const BorelData& B, const Rat& kappa, const Cplx& u, long M,
                     const PrecisionContext& ctx, Real* err_out) {
    Real tol = ctx.quad_tol();
    Rat delta = kappa - B.shift;
    bool canonical = delta == Rat(0);
    Real absu = abs(u);
    Cplx acc(0L);
    Real tail_est(0L);
    long hard_cap = std::max<long>(8 * M, 4096);
    for (long i = 0;; ++i) {
        if (i >= hard_cap) break;
        const BorelPole& pl = B.pole((size_t)i);
        Real aom = abs(pl.omega);
        Cplx r = I_times(pl.stokes) / (2L * pi());  // -S/(2 pi i)
        Cplx x = u / pl.omega;
        if (canonical) {
            acc += r * pow(x, Real(B.ell)) / (u - pl.omega);
        } else {
            acc -= (r / pl.omega) * borel_kernel(B.shift, delta, B.ell, x);
        }
        if (i + 1 >= M && aom > absu * Real(2L)) {
            Real q = absu / aom;
            Real lead = B.tail_C * exp(B.tail_p * log(aom)) * exp(Real(B.ell) * log(q)) /
                        (aom * (Real(1L) - q));
            Real count = aom / B.tail_gap;
            tail_est = lead * (Real(2L) + count / Real(std::max(1L, B.ell - 1)));
            if (tail_est < tol) break;
        }
    }
    if (err_out) *err_out = tail_est;
    return acc;
}

Real ray_clearance(const BorelData& B, const Real& theta) {
    Real best = pi();
    for (long i = 0; i < 24; ++i) {
        const BorelPole& p = B.pole((size_t)i);
        Real a = arg(p.omega);
        for (long k = -1; k <= 1; ++k) {
            Real d = abs(a - theta + Real(k) * (2L * pi()));
            if (d < best) best = d;
        }
    }
    return best;
}

} // namespace

LapResult borel_laplace_sum(const BorelData& B, const Rat& kappa, const Real& theta,
                            const Cplx& z, long M, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    // exact head: the Laplace transform undoes the shifted Borel transform on
    // monomials, so the head polynomial contributes sum c_n z^n for any theta
    Cplx headv(0L);
    {
        Cplx p(1L);
        for (size_t n = 0; n < B.head.size(); ++n) {
            headv += B.head[n] * p;
            p = p * z;
        }
    }
    if (B.poles_cached() == 0) {
        // probe whether data has poles at all
        bool any = true;
        try {
            (void)B.pole(0);
        } catch (const NumericalError&) {
            any = false;
        }
        if (!any) return {headv, Real(0L)};
    }
    if (ray_clearance(B, theta) < pow10(-10))
        throw PreconditionError("borel_laplace_sum: theta lies on a Stokes ray");
    Real node_err(0L);
    auto psi = [&](const Cplx& u) -> Cplx {
        Real e;
        Cplx v = borel_tail_eval(B, kappa, u, M, ctx, &e);
        if (e > node_err) node_err = e;
        return v;
    };
    LapResult lr = laplace_dir(psi, kappa, theta, z, ctx);
    // crude propagation of the pole-tail truncation through the transform
    Real gk = abs(complex_gamma(Cplx(kappa.to_real())));
    Real wre = (polar(Real(1L), theta) / z).re;
    Real prop = node_err * gk * pow(abs(z), kappa.to_real() - Real(1L)) / wre;
    return {headv + lr.value, lr.err_est + prop};
}

LapResult discontinuity(const BorelData& B, const Rat& kappa, const Real& theta, const Cplx& z,
                        long M, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    Cplx eith = polar(Real(1L), theta);
    Real decay = (eith / z).re;
    if (decay.sign() <= 0)
        throw PreconditionError("discontinuity: non-decaying direction");
    std::vector<BorelPole> ray = stokes_ray_data(B, theta, M);
    Cplx acc(0L);
    Real km1 = kappa.to_real() - Real(1L);
    Real lastmag(0L);
    for (const BorelPole& p : ray) {
        Cplx term = p.stokes * pow(p.omega, km1) * exp(-(p.omega / z));
        acc += term;
        lastmag = abs(term);
    }
    Real q = exp(-(B.tail_gap * decay));
    Real tail = lastmag * q / (Real(1L) - q) * Real(4L);
    return {pow(z, -kappa.to_real()) * acc, tail};
}

MedianResult median_sum(const BorelData& B, const Real& theta, const Cplx& z,
                        const RaySpec& ray, long M, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    Real eps = ray.epsilon;
    // enlarge the offset until both lateral rays clear the pole rays
    for (int tries = 0; tries < 6; ++tries) {
        if (ray_clearance(B, theta + eps) >= eps / 2L &&
            ray_clearance(B, theta - eps) >= eps / 2L)
            break;
        eps = eps * Real(3L) / 2L;
    }
    Rat kap = B.shift;
    LapResult sp = borel_laplace_sum(B, kap, theta + eps, z, M, ctx);
    LapResult sm = borel_laplace_sum(B, kap, theta - eps, z, M, ctx);
    MedianResult out;
    out.lateral_plus = sp.value;
    out.lateral_minus = sm.value;
    out.value = (sp.value + sm.value) / 2L;
    LapResult d = discontinuity(B, kap, theta, z, M, ctx);
    Cplx alt = sm.value + d.value / 2L;
    out.decomp_residual = abs(out.value - alt);
    out.err_est = sp.err_est + sm.err_est + d.err_est;
    if (out.decomp_residual > (out.err_est + pow10(-8)) * Real(64L) + abs(out.value) * pow10(-8))
        throw NumericalError("median_sum: lateral/discontinuity representations disagree");
    return out;
}

LapResult gaussian_kernel_sum(const FormPtr& g, const GroupElement& gamma, const Cplx& z,
                              const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    if (gamma.c <= 0) throw PreconditionError("gaussian_kernel_sum: need c > 0");
    Rat x0 = gamma.cusp();
    Cplx zeta = z + Cplx(Real(-x0.num) / Real(-x0.den));  // z + d/c
    zeta = z - Cplx(x0.to_real());
    if (zeta.im.sign() <= 0)
        throw PreconditionError("gaussian_kernel_sum: z + d/c must lie in the upper half-plane");
    Real tol = ctx.quad_tol();
    // collect terms b_mu zeta_c^{-d mu} with sqrt(mu) cached
    Real eps_line(3L);
    std::vector<Real> sq;
    std::vector<Cplx> cf;
    {
        Real C(g->growth_C);
        Real w = g->growth_exponent.to_real();
        Real cut = tol * pow10(-2);
        for (long i = 0;; ++i) {
            const Coef& c = g->coef((size_t)i);
            Real mu = c.mu.to_real();
            Cplx v = c.value() * e2pi((c.mu * x0).frac().to_real(), Real(0L));
            sq.push_back(sqrt(mu));
            cf.push_back(v);
            Real bound = C * exp(w * log(mu + Real(1L)) - sqrt(mu) * eps_line);
            if (bound < cut && i > 4) break;
            if (i > 3000000) throw NumericalError("gaussian_kernel_sum: term budget exceeded");
        }
    }
    Cplx a = I_times(zeta) * (8L * pi());  // 8 pi i zeta
    Cplx inv_a = inv(a);
    Real spi = sqrt(pi());
    auto node = [&](const Real& s) -> Cplx {
        Cplx eta{eps_line, s};
        Cplx inner(0L);
        if (g->constant_term != 0) inner = Cplx(Real((long)g->constant_term));
        for (size_t i = 0; i < sq.size(); ++i) {
            Cplx e = eta * sq[i];
            Real m = exp(-e.re);
            inner += cf[i] * Cplx(m * cos(e.im), -(m * sin(e.im)));
        }
        Cplx gauss = exp(-(eta * eta * inv_a));
        return inner * gauss;
    };
    QuadResult qr = quad_line(node, tol);
    if (!qr.converged) throw NumericalError("gaussian_kernel_sum: quadrature budget exceeded");
    // integral over the vertical line: i * Int ds; prefactor 1/(sqrt(pi) sqrt(8 pi i zeta))
    Cplx val = I_times(qr.value) / (Cplx(spi) * sqrt(a));
    return {val, qr.err_est / abs(Cplx(spi) * sqrt(a))};
}

LapResult eisenstein_log_correction(const Cplx& z, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    if (z.im.sign() <= 0)
        throw PreconditionError("eisenstein_log_correction: z must lie in the upper half-plane");
    Real tol = ctx.quad_tol();
    Real r0 = pi();  // half of |omega_1| = 2 pi
    Real eps = pi() / 64L;
    Real thp = pi() / 2L + eps, thm = pi() / 2L - eps;
    Cplx two_pi_i = I_times(Cplx(2L * pi()));
    auto P = [&](const Cplx& u) -> Cplx {
        Cplx lg = log(I_times(u) * (8L * pi()));
        Cplx k = (Cplx(-4L) + Cplx(2L) * lg) / (two_pi_i * u);
        return exp(-(u / z)) * k / sqrt(u);
    };
    auto ray_integral = [&](const Real& th) -> QuadResult {
        Cplx eith = polar(Real(1L), th);
        Real decay = (eith / z).re;
        if (decay.sign() <= 0)
            throw PreconditionError("eisenstein_log_correction: ray does not decay");
        auto f = [&](const Real& x) -> Cplx { return P(eith * (r0 + x)) * eith; };
        return quad_exp_sinh(f, Real(1L) / decay, tol);
    };
    QuadResult rp = ray_integral(thp);
    QuadResult rm = ray_integral(thm);
    // arc phi in (pi/2+eps, 5 pi/2-eps), sqrt and log tracked along the winding
    auto arcf = [&](const Real& phi) -> Cplx {
        Cplx u = polar(r0, phi);  // tracked angle phi, cos/sin periodic
        Cplx lg{log(8L * pi() * r0), phi - Real(3L) * pi() / 2L};
        Cplx k = (Cplx(-4L) + Cplx(2L) * lg) / (two_pi_i * u);
        Cplx sqrt_u = polar(sqrt(r0), phi / 2L);
        Cplx du = I_times(u);  // d u / d phi
        return exp(-(u / z)) * k / sqrt_u * du;
    };
    QuadResult arc = quad_tanh_sinh(arcf, thp, Real(5L) * pi() / 2L - eps, tol);
    if (!rp.converged || !rm.converged || !arc.converged)
        throw NumericalError("eisenstein_log_correction: quadrature budget exceeded");
    Cplx total = arc.value - rp.value - rm.value;
    Cplx pref = Cplx(1L) / (Cplx(2L) * sqrt(Cplx(pi()) * z));
    return {pref * total, (rp.err_est + rm.err_est + arc.err_est) * abs(pref)};
}

LapResult odd_part_contour(const FormPtr& g, const GroupElement& gamma_in, const Cplx& z,
                           long M, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    GroupElement gamma = gamma_in;
    if (gamma.c == 0) throw PreconditionError("odd_part_contour: c != 0 required");
    if (gamma.c < 0) gamma = GroupElement(-gamma.a, -gamma.b, -gamma.c, -gamma.d);
    long c = gamma.c;
    Rat x0 = gamma.cusp();
    Cplx zeta = z - Cplx(x0.to_real());
    Rat ac(gamma.a, gamma.c);
    Real c2 = Real(c) * Real(c);

    FormPtr f;          // cusp form whose coefficients drive the pole sum
    Rat k;              // its weight
    Rat kap;            // Laplace shift
    long ell = 0;
    Real numer_pow;     // power of m in the numerator
    if (g->cls == FormClass::cusp_integer || g->cls == FormClass::cusp_half) {
        f = g;
        k = g->weight;
        kap = k + Rat(1, 2);
        ell = 0;
        numer_pow = Real(0L);
    } else if (g->cls == FormClass::eichler_integer) {
        f = underlying_cusp_form(g);
        k = f->weight;
        kap = Rat(5, 2) - k;
        // ell large enough that sum_m |a_m| m^{-1/2-1-ell+...} converges fast
        ell = (long)(f->growth_exponent.to_double() + 2.5);
        numer_pow = Real(-0.5);
    } else {
        throw PreconditionError("odd_part_contour: class without an odd-part identity");
    }
    Cplx w = slash_multiplier(*f, gamma, k);

    // pole data omega_m = 2 pi i mu/c^2 with numerators a(m) zeta^{a mu} m^{numer_pow}
    struct Pole { Cplx omega; Cplx num; };
    auto poles = std::make_shared<std::vector<Pole>>();
    auto extend = [&, poles](size_t need) {
        while (poles->size() < need) {
            const Coef& cfm = f->coef(poles->size());
            Cplx om = I_times(Cplx(2L * pi() * cfm.mu.to_real() / c2));
            Cplx nu = cfm.value() * e2pi((cfm.mu * ac).frac().to_real(), Real(0L));
            if (!numer_pow.is_zero()) nu = nu * pow(cfm.mu.to_real(), numer_pow);
            poles->push_back(Pole{om, nu});
        }
    };
    Cplx pref;
    if (ell == 0) {
        // (w/(pi i c^k)) sum a(m) zeta^{am} omega^{1/2-k} / (u - omega)
        pref = w / (I_times(Cplx(pi())) * Cplx(pow(Real(c), k.to_real())));
    } else {
        // (w c^{k-2}/(pi i)) (2 pi i/c^2)^{k-3/2} sum a(m) zeta^{am} m^{-1/2} (u/omega)^ell/(u-omega)
        Cplx base = I_times(Cplx(2L * pi())) / Cplx(c2);
        pref = w * Cplx(pow(Real(c), (k - Rat(2)).to_real())) / I_times(Cplx(pi())) *
               pow(base, (k - Rat(3, 2)).to_real());
    }
    Real tol = ctx.quad_tol();
    auto psi = [&, poles](const Cplx& u) -> Cplx {
        Cplx acc(0L);
        Real absu = abs(u);
        for (size_t i = 0;; ++i) {
            if (i >= poles->size()) extend(i + 64);
            const Pole& p = (*poles)[i];
            Cplx term;
            if (ell == 0) {
                term = p.num * pow(p.omega, (Rat(1, 2) - k).to_real()) / (u - p.omega);
            } else {
                term = p.num * pow(u / p.omega, Real(ell)) / (u - p.omega);
            }
            acc += term;
            Real aom = abs(p.omega);
            if ((long)i > M && aom > absu * Real(2L) && abs(term) < tol) break;
            if (i > 400000) throw NumericalError("odd_part_contour: pole budget exceeded");
        }
        return pref * acc;
    };
    Real thp = pi() / 2L + pi() / 64L;
    Real thm = pi() / 2L - pi() / 64L;
    LapResult Sp = laplace_dir(psi, kap, thp, zeta, ctx);
    LapResult Sm = laplace_dir(psi, kap, thm, zeta, ctx);
    Cplx val = sqrt(zeta) / 2L * (Sm.value - Sp.value);
    return {val, (Sp.err_est + Sm.err_est) * abs(sqrt(zeta)) / 2L};
}

} // namespace qmf
