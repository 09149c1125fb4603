#include "qmf/qmod.hpp"

#include <algorithm>
#include <cmath>

#include "qmf/parallel.hpp"

namespace qmf {

namespace {

bool is_periodic_class(FormClass c) {
    return c == FormClass::maass_periodic || c == FormClass::eisenstein_periodic;
}

void require_s_like(const GroupElement& g) {
    if (g.d != 0 || g.c != 1)
        throw PreconditionError("periodic classes transform under the pair involution at 0");
}

// f(x0 + s e^{i beta}) with exact phases at the rational base point; the
// small-s part goes through the modular transformation attached to gamma.
Cplx eval_on_ray(const FormSpec& f, const GroupElement& gamma, const Real& s, const Real& beta,
                 const PrecisionContext& ctx) {
    long c = gamma.c;
    Rat x0 = gamma.cusp();
    Real sn = sin(beta), cs = cos(beta);
    if (s * Real(c) >= Real(1L)) {
        // direct: sum a_mu e^{2 pi i mu x0} e^{2 pi i mu s e^{i beta}}
        Real tol = ctx.series_tail_tol();
        Real a = 2L * pi() * s * sn;
        Cplx acc{Real((long)f.constant_term), Real(0L)};
        Real C(f.growth_C);
        Real w = f.growth_exponent.to_real();
        Real delta = f.exponent_gap.is_zero() ? Real(1L) : f.exponent_gap.to_real();
        for (long i = 0;; ++i) {
            const Coef& cf = f.coef((size_t)i);
            Real mu = cf.mu.to_real();
            Real ph = 2L * pi() * mu * s * cs;
            Real damp = exp(-(2L * pi() * mu * s * sn));
            Cplx term = cf.value() * e2pi((cf.mu * x0).frac().to_real(), Real(0L)) *
                        Cplx(damp * cos(ph), damp * sin(ph));
            acc += term;
            Real M = mu + delta;
            Real slack = a - w / M;
            if (slack.sign() > 0 && i > 4) {
                Real tail = C * exp(w * log(M) - a * M) / (Real(1L) - exp(-(delta * slack)));
                if (tail < tol) return acc;
            }
            if (i > 4000000) throw NumericalError("eval_on_ray: budget exceeded");
        }
    }
    // reflected: f(x0 + w) = mult (c w)^{-k} f(a/c - 1/(c^2 w))
    Rat k = f.weight;
    Cplx mult = slash_multiplier(f, gamma, k);
    Cplx wz = polar(s, beta);
    Cplx inner = Cplx(Rat(gamma.a, gamma.c).to_real()) - inv(wz * Real(c) * Real(c));
    if (inner.im.sign() <= 0) throw NumericalError("eval_on_ray: reflected point fell below R");
    Cplx fv = eval_qseries(f, inner, ctx).value;
    return mult * pow(Cplx(Real(c)) * wz, -k.to_real()) * fv;
}

} // namespace

Cplx pair_slash(const FormPtr& g, const Cplx& z, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    if (!is_periodic_class(g->cls))
        throw PreconditionError("pair_slash: periodic classes only");
    long N = g->level;
    FormPtr star = (g->cls == FormClass::eisenstein_periodic) ? g : g->companion;
    if (!star) throw PreconditionError("pair_slash: companion stream missing");
    Cplx w = Cplx(-1L) / (z * Real(N));
    Cplx fv;
    if (w.im.sign() > 0) {
        fv = eval_qseries(*star, w, ctx).value;
    } else {
        throw PreconditionError("pair_slash: -1/(N z) not in the upper half-plane");
    }
    return fv / (sqrt(Real(N)) * z);
}

Cplx obstruction_direct(const FormPtr& g, const GroupElement& gamma, const Cplx& z,
                        const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    if (z.im.sign() <= 0)
        throw PreconditionError("obstruction_direct: z must lie in the upper half-plane");
    if (is_periodic_class(g->cls)) {
        require_s_like(gamma);
        Cplx fz = eval_qseries(*g, z, ctx).value;
        return fz - pair_slash(g, z, ctx);
    }
    Rat kappa = g->weight;
    Cplx fz = eval_qseries(*g, z, ctx).value;
    Cplx sl = slash(*g, gamma, kappa, z, ctx);
    if (g->cls == FormClass::eichler_half) {
        long chi = kronecker_symbol(-4, gamma.d);
        sl = sl * Cplx(Real((long)chi));
    }
    return fz - sl;
}

Cplx obstruction_borel(const FormPtr& g, const BorelData& B, const Cplx& z, long M,
                       const PrecisionContext& ctx, Real* err_out) {
    ContextScope cs(ctx);
    Cplx zeta = z - Cplx(B.gamma.cusp().to_real());
    if (zeta.im.is_zero() && zeta.re.sign() <= 0)
        throw PreconditionError("obstruction_borel: z on the cut");
    // direction sweep inside the pole-free sector around theta0
    Real theta0 = B.direction_reversed ? pi() : Real(0L);
    Real az = arg(zeta * polar(Real(1L), -theta0));
    Real dmax = pi() / 2L - pi() / 48L;
    Real th = az;
    if (th > dmax) th = dmax;
    if (th < -dmax) th = -dmax;
    th = th + theta0;
    if ((polar(Real(1L), th) / zeta).re.sign() <= 0)
        throw NumericalError("obstruction_borel: direction sweep blocked at the cut");
    LapResult s = borel_laplace_sum(B, B.shift, th, zeta, M, ctx);
    Cplx val = s.value;
    Real err = s.err_est;
    if (B.source == FormClass::eisenstein_periodic) {
        LapResult lc = eisenstein_log_correction(z, ctx);
        val += lc.value - inv(z);  // constant term's image under the involution
        err += lc.err_est;
    }
    if (err_out) *err_out = err;
    return val;
}

Cplx obstruction_integral(const FormPtr& g, const GroupElement& gamma_in, const Cplx& z,
                          const PrecisionContext& ctx, Real* err_out) {
    ContextScope cs(ctx);
    if (g->cls != FormClass::eichler_integer && g->cls != FormClass::eichler_half)
        throw PreconditionError("obstruction_integral: Eichler classes only");
    GroupElement gamma = gamma_in;
    if (gamma.c == 0) throw PreconditionError("obstruction_integral: c != 0 required");
    if (gamma.c < 0) gamma = GroupElement(-gamma.a, -gamma.b, -gamma.c, -gamma.d);
    FormPtr f = underlying_cusp_form(g);
    Rat k = f->weight;
    Real scale = eichler_scale(*g, *f, k);
    Rat x0 = gamma.cusp();
    Cplx zeta = z - Cplx(x0.to_real());
    // ray angle: steer right of z when the straight vertical path would cross
    // the branch ray {z - s : s >= 0}
    Real beta = pi() / 2L;
    if (z.im.sign() > 0 && zeta.re.sign() > 0) {
        Real az = arg(zeta);
        beta = az * Real(0.9);
        if (beta > pi() / 2L) beta = pi() / 2L;
    }
    Cplx eib = polar(Real(1L), beta);
    Real km2 = (k - Rat(2)).to_real();
    auto integrand = [&](const Real& s) -> Cplx {
        Cplx tau = Cplx(x0.to_real()) + eib * s;
        Cplx base = tau - z;
        if (base.im.is_zero() && base.re.sign() <= 0)
            throw PreconditionError("obstruction_integral: path hit the branch cut");
        Cplx fv = eval_on_ray(*f, gamma, s, beta, ctx);
        return fv * pow(base, km2) * eib;
    };
    Real mu1 = f->coef(0).mu.to_real();
    Real scale_s = Real(1L) / (2L * pi() * mu1 * sin(beta));
    if (scale_s > Real(4L)) scale_s = Real(4L);
    QuadResult qr = quad_exp_sinh(integrand, scale_s, ctx.quad_tol());
    if (!qr.converged) throw NumericalError("obstruction_integral: quadrature budget exceeded");
    // prefactor (-2 pi i)^{k-1} / Gamma(k-1)
    Cplx m2pii{Real(0L), -(2L * pi())};
    Cplx pref = pow(m2pii, (k - Rat(1)).to_real()) / complex_gamma(Cplx((k - Rat(1)).to_real()));
    if (err_out) *err_out = qr.err_est * abs(pref) * Real(scale);
    return Cplx(scale) * pref * qr.value;
}

std::vector<Cplx> period_polynomial(const FormPtr& f, long k, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    if (f->cls == FormClass::generic && f->coef(0).ival == 0)
        return {};  // zero form: zero polynomial
    if (k < 4 || k % 2 != 0) throw PreconditionError("period_polynomial: k >= 4 even required");
    if (f->level != 1) throw PreconditionError("period_polynomial: level 1 required");
    GroupElement S(0, -1, 1, 0);
    Cplx m2pii{Real(0L), -(2L * pi())};
    Cplx pref = pow(m2pii, Real(k - 1)) / complex_gamma(Cplx(Real(k - 1)));
    std::vector<Cplx> out;
    // binomials exactly
    std::vector<Real> binom((size_t)k - 1, Real(0L));
    binom[0] = Real(1L);
    for (long row = 1; row <= k - 2; ++row)
        for (long j = row; j >= 1; --j) binom[(size_t)j] += binom[(size_t)j - 1];
    for (long n = 0; n <= k - 2; ++n) {
        Cplx lam = lambda_completed(*f, S, Cplx(Real(n + 1)), ctx, false);
        Cplx ipw = i_pow(Rat(n - 1));
        out.push_back(pref * Cplx(binom[(size_t)n]) * ipw * lam);
    }
    return out;
}

Cplx eval_poly(const std::vector<Cplx>& coeffs, const Cplx& z) {
    Cplx acc(0L);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

Real odd_part_slash_check(const FormPtr& g, const GroupElement& gamma, const Cplx& z, long M,
                          const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    LapResult od = odd_part_contour(g, gamma, z, M, ctx);
    Rat kappa = g->weight;  // k for cusp classes, 2-k stored for Eichler classes
    Cplx sl = slash(*g, gamma, kappa, z, ctx);
    return abs(od.value - sl);
}

ObstructionReport cutplane_scan(const FormPtr& g, const GroupElement& gamma,
                                const GridSpec& grid, const std::vector<std::string>& methods,
                                long M, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    ObstructionReport rep;
    rep.gamma = gamma;
    rep.kappa = g->weight;
    rep.form = g->name;
    rep.max_pairwise = Real(0L);
    rep.continuity_jump = Real(0L);
    auto has = [&](const char* m) {
        return std::find(methods.begin(), methods.end(), std::string(m)) != methods.end();
    };
    BorelData B;
    std::vector<Cplx> poly;
    if (has("borel")) B = borel_continue(g, gamma, ctx, 12);
    if (has("polynomial")) {
        FormPtr f = underlying_cusp_form(g);
        poly = period_polynomial(f, 2 - g->weight.num, ctx);
    }
    CutPlaneRegion region{gamma};
    std::vector<Cplx> zs;
    for (long iy = 0; iy < grid.ny; ++iy) {
        for (long ix = 0; ix < grid.nx; ++ix) {
            Real x = grid.x_lo + (grid.x_hi - grid.x_lo) * Real(ix) / Real(grid.nx - 1);
            Real y = grid.y_lo + (grid.y_hi - grid.y_lo) * Real(iy) / Real(grid.ny - 1);
            Cplx z{x, y};
            if (abs(z.im) < grid.cut_margin) continue;
            if (!region.contains(z)) continue;
            zs.push_back(z);
        }
    }
    rep.points.resize(zs.size());
    parallel_for(zs.size(), [&](size_t i) {
        ObstructionPoint& pt = rep.points[i];
        pt.z = zs[i];
        pt.max_discrepancy = Real(0L);
        try {
            if (has("direct") && zs[i].im.sign() > 0) {
                bool gamma_ok = true;
                if (!is_periodic_class(g->cls)) {
                    Cplx gz = gamma.mobius(zs[i]);
                    gamma_ok = gz.im.sign() > 0;
                }
                if (gamma_ok) {
                    pt.values["direct"] = obstruction_direct(g, gamma, zs[i], ctx);
                    pt.errs["direct"] = ctx.series_tail_tol();
                }
            }
            if (has("borel")) {
                Real e;
                pt.values["borel"] = obstruction_borel(g, B, zs[i], M, ctx, &e);
                pt.errs["borel"] = e;
            }
            if (has("integral")) {
                Real e;
                pt.values["integral"] = obstruction_integral(g, gamma, zs[i], ctx, &e);
                pt.errs["integral"] = e;
            }
            if (has("polynomial")) {
                Cplx zeta = zs[i] - Cplx(gamma.cusp().to_real());
                pt.values["polynomial"] = eval_poly(poly, zeta);
                pt.errs["polynomial"] = ctx.quad_tol();
            }
        } catch (const std::exception& e) {
            pt.ok = false;
            pt.note = e.what();
        }
        for (auto it1 = pt.values.begin(); it1 != pt.values.end(); ++it1)
            for (auto it2 = std::next(it1); it2 != pt.values.end(); ++it2) {
                Real d = abs(it1->second - it2->second);
                if (d > pt.max_discrepancy) pt.max_discrepancy = d;
            }
    });
    for (const auto& pt : rep.points) {
        if (!pt.ok) { ++rep.failures; continue; }
        if (pt.max_discrepancy > rep.max_pairwise) rep.max_pairwise = pt.max_discrepancy;
    }
    // continuity of the borel route across the axis at mirrored points
    if (has("borel")) {
        Real delta = grid.cut_margin;
        std::vector<Real> xs;
        for (long ix = 0; ix < grid.nx; ++ix) {
            Real x = grid.x_lo + (grid.x_hi - grid.x_lo) * Real(ix) / Real(grid.nx - 1);
            Cplx zp{x, delta};
            if (!region.contains(zp) || !region.contains(Cplx{x, -delta})) continue;
            Cplx xi{x, Real(0L)};
            if (!region.contains(xi)) continue;  // stay away from the cut itself
            xs.push_back(x);
        }
        std::vector<Real> jumps(xs.size(), Real(0L));
        parallel_for(xs.size(), [&](size_t i) {
            try {
                Cplx up = obstruction_borel(g, B, Cplx{xs[i], delta}, M, ctx);
                Cplx dn = obstruction_borel(g, B, Cplx{xs[i], -delta}, M, ctx);
                jumps[i] = abs(up - dn);
            } catch (const std::exception&) {
                jumps[i] = Real(-1L);
            }
        });
        for (const Real& j : jumps)
            if (j > rep.continuity_jump) rep.continuity_jump = j;
    }
    return rep;
}

} // namespace qmf
