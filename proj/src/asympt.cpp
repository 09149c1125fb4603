#include "qmf/asympt.hpp"

#include <cmath>
#include <sstream>

namespace qmf {

Cplx AsymptoticSeries::head_eval(const Cplx& dz, long upto) const {
    Cplx acc(0L);
    Cplx p(1L);
    for (long n = 0; n < upto && n < (long)coeffs.size(); ++n) {
        acc += coeffs[(size_t)n] * p;
        p = p * dz;
    }
    return acc;
}

Cplx AsymptoticSeries::log_head_eval(const Cplx& dz) const {
    if (!has_log_head) return Cplx(0L);
    Cplx m2piz = Cplx(Real(0L), -(2L * pi())) * dz;
    return Cplx(log_alpha) * (log(m2piz) - Cplx(euler_gamma())) / m2piz;
}

std::string AsymptoticSeries::to_json(int digits) const {
    std::ostringstream os;
    os << "{\"base_point\":\"" << base_point.str() << "\",\"shift\":\"" << shift.str()
       << "\",\"ell\":" << ell << ",\"log_alpha\":\""
       << (has_log_head ? log_alpha.str(digits) : std::string("0")) << "\",\"coeffs\":[";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << "[\"" << coeffs[i].re.str(digits) << "\",\"" << coeffs[i].im.str(digits) << "\"]";
    }
    os << "]";
    if (cert) {
        os << ",\"gevrey\":{\"A\":\"" << cert->A.str(8) << "\",\"B\":\"" << cert->B.str(8)
           << "\",\"convergent\":" << (cert->convergent ? "true" : "false") << "}";
    }
    os << "}";
    return os.str();
}

Real eichler_scale(const FormSpec& g, const FormSpec& f, const Rat& k) {
    const Coef& b0 = g.coef(0);
    const Coef& a0 = f.coef(0);
    if (b0.mu != a0.mu)
        throw PreconditionError("eichler_scale: streams are not aligned");
    Real base = abs(a0.value()) * pow(a0.mu.to_real(), (Rat(1) - k).to_real());
    return abs(b0.value()) / base;
}

Cplx eichler_l_value(const FormSpec& f, const GroupElement& gamma, const Cplx& rho,
                     const PrecisionContext& ctx) {
    GroupElement gr = reflected_gamma(gamma);
    bool reflect = true;
    try {
        (void)slash_multiplier(f, gr, f.weight);
    } catch (const PreconditionError&) {
        reflect = false;  // direct small-t evaluation instead
    }
    Cplx lam = lambda_completed(f, gr, rho, ctx, reflect);
    Cplx pref = exp(rho * Cplx(log(2L * pi() / Real(gamma.c)))) / complex_gamma(rho);
    return lam * pref;
}

FormPtr underlying_cusp_form(const FormPtr& g) {
    if (g->name == "theta_plus_tilde") return catalog_form("theta_plus");
    if (g->name.size() > 8 && g->name.substr(g->name.size() - 8) == "_eichler")
        return catalog_form(g->name.substr(0, g->name.size() - 8));
    throw PreconditionError("asympt: no underlying cusp form known for '" + g->name + "'");
}

AsymptoticSeries asympt_build(const FormPtr& g, const GroupElement& gamma_in, long N,
                              const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    if (N < 1) throw PreconditionError("asympt_build: N >= 1 required");
    AsymptoticSeries phi;
    phi.gamma = gamma_in;
    phi.source = g->cls;
    if (gamma_in.c == 0) throw PreconditionError("asympt_build: c != 0 required");
    if (gamma_in.c < 0) {
        phi.gamma = GroupElement(-gamma_in.a, -gamma_in.b, -gamma_in.c, -gamma_in.d);
        phi.direction_reversed = true;
    }
    const GroupElement& gamma = phi.gamma;
    phi.base_point = gamma.cusp();
    long c = gamma.c;

    switch (g->cls) {
        case FormClass::cusp_integer:
        case FormClass::cusp_half: {
            phi.shift = Rat(1);
            phi.coeffs.assign((size_t)N, Cplx(0L));
            return phi;
        }
        case FormClass::eichler_integer: {
            FormPtr f = underlying_cusp_form(g);
            Rat k = f->weight;
            phi.shift = Rat(1);
            phi.ell = 0;
            Real scale = eichler_scale(*g, *f, k);
            long kk = k.num;
            phi.coeffs.assign((size_t)N, Cplx(0L));
            Cplx ik = i_pow(-k);
            for (long n = 0; n < N && n <= kk - 2; ++n) {
                Cplx L = eichler_l_value(*f, gamma, Cplx(Real(n + 1)), ctx);
                Real cpow = pow(Real(c) / (2L * pi()), 2 * n + 2 - kk);
                Cplx tp = pow(I_times(Cplx(1L)) * Cplx(2L * pi()), Real(n));
                Cplx gden = complex_gamma(Cplx(Real(kk - 1 - n)));
                phi.coeffs[(size_t)n] = Cplx(scale) * ik * Cplx(cpow) * tp * L / gden;
            }
            return phi;
        }
        case FormClass::eichler_half: {
            FormPtr f = underlying_cusp_form(g);
            Rat k = f->weight;
            phi.shift = Rat(2) - k;
            phi.ell = (long)std::ceil(k.to_double()) + 1;
            Real scale = eichler_scale(*g, *f, k);
            Cplx w = slash_multiplier(*f, gamma, k);
            Real two_mk = (Rat(2) - k).to_real();
            Cplx pref = Cplx(scale) * w / I_times(Cplx(pi())) / Cplx(pow(Real(c), two_mk));
            Cplx base = I_times(Cplx(2L * pi() / (Real(c) * Real(c))));
            phi.coeffs.reserve((size_t)N);
            for (long n = 0; n < N; ++n) {
                Cplx L = eichler_l_value(*f, gamma, Cplx(Real(n + 1)), ctx);
                Cplx gn = complex_gamma(Cplx(Real(n) + two_mk));
                Cplx denom = pow(base, Real(n) + two_mk);
                phi.coeffs.push_back(pref * gn * L / denom);
            }
            return phi;
        }
        case FormClass::maass_periodic:
        case FormClass::eisenstein_periodic: {
            if (gamma.d != 0 || c != 1)
                throw PreconditionError("asympt_build: periodic classes expand at 0 (gamma = S)");
            phi.shift = Rat(1);
            phi.ell = 3;
            long Nf = g->level;
            if (g->cls == FormClass::eisenstein_periodic) {
                phi.has_log_head = true;
                phi.log_alpha = Real(-4L);
                phi.coeffs.assign((size_t)N, Cplx(0L));
                for (long n = 1; n < N; n += 2) {
                    Real fact(1L);
                    for (long j = 2; j <= n; ++j) fact *= j;
                    Cplx z2 = zeta_squared(Cplx(Real(n + 1)), ctx);
                    Cplx pw = pow(I_times(Cplx(2L * pi())), Real(-(n + 1)));
                    phi.coeffs[(size_t)n] =
                        Cplx(Real(-8L)) / I_times(Cplx(pi())) * Cplx(fact) * z2 * pw;
                }
                return phi;
            }
            if (!g->companion)
                throw PreconditionError("asympt_build: Maass pair needs a companion stream");
            Real sqrtN = sqrt(Real(Nf));
            LValueOptions lopt;
            lopt.allow_deep = true;
            lopt.cut_override = ctx.series_tail_tol();
            TwistedLSeries Lp{g, Rat(0)};
            TwistedLSeries Lm{g->companion, Rat(0)};
            std::vector<LValue> vp = l_series_run(Lp, Cplx(1L), (int)N, ctx, lopt);
            std::vector<LValue> vm = l_series_run(Lm, Cplx(1L), (int)N, ctx, lopt);
            Cplx om_up = I_times(Cplx(2L * pi() / Real(Nf)));
            for (long n = 0; n < N; ++n) {
                Real fact(1L);
                for (long j = 2; j <= n; ++j) fact *= j;
                Cplx upper = vm[(size_t)n].value * pow(om_up, Real(-(n + 1)));
                Cplx lower = vp[(size_t)n].value * pow(-om_up, Real(-(n + 1)));
                phi.coeffs.push_back((Cplx(2L) / Cplx(sqrtN)) * Cplx(fact) /
                                     I_times(Cplx(2L * pi())) * (upper + lower));
            }
            return phi;
        }
        default:
            throw PreconditionError("asympt_build: unsupported form class");
    }
}

GevreyCertificate gevrey_fit(const AsymptoticSeries& phi) {
    long N = (long)phi.coeffs.size();
    if (N < 10) throw PreconditionError("gevrey_fit: need at least 10 coefficients");
    GevreyCertificate cert;
    cert.n_from = N / 2;
    cert.n_to = N - 1;
    bool all_zero = true;
    for (const Cplx& cv : phi.coeffs)
        if (!cv.is_zero()) { all_zero = false; break; }
    if (all_zero) {
        cert.A = pow10(-30);
        cert.B = Real(1L);
        return cert;
    }
    Real best(0L);
    Real fact(1L);
    std::vector<Real> roots;
    for (long n = 1; n < N; ++n) {
        fact *= n;
        if (n < cert.n_from) continue;
        Real an = abs(phi.coeffs[(size_t)n]);
        if (an.is_zero()) continue;
        Real r = exp(log(an / fact) / Real(n));
        roots.push_back(r);
        if (r > best) best = r;
    }
    if (roots.empty()) throw NumericalError("gevrey_fit: no usable coefficients");
    if (roots.size() >= 4) {
        Real first = roots.front(), last = roots.back();
        if (last > first * Real(4L))
            throw NumericalError("gevrey_fit: growth faster than Gevrey-1 on the range");
        if (last < first / Real(4L) && last < best / Real(4L)) cert.convergent = true;
    }
    cert.B = best * Real(1.005);
    Real A(0L);
    Real f2(1L);
    for (long n = 0; n < N; ++n) {
        if (n > 0) f2 *= n;
        Real an = abs(phi.coeffs[(size_t)n]);
        if (an.is_zero()) continue;
        Real need = an / (pow(cert.B, n) * f2);
        if (need > A) A = need;
    }
    cert.A = A;
    return cert;
}

SlopeReport asympt_residual(const FormPtr& g, const AsymptoticSeries& phi,
                            const std::vector<Real>& ts, long n_partial,
                            const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    SlopeReport rep;
    rep.n_partial = n_partial;
    for (const Real& t : ts) {
        Cplx gz = eval_qseries_geodesic(*g, phi.base_point, t, ctx).value;
        Cplx dz{Real(0L), t};
        Cplx r = gz - phi.log_head_eval(dz) - phi.head_eval(dz, n_partial);
        rep.ts.push_back(t);
        rep.log_abs_residual.push_back(log(abs(r)));
    }
    size_t n = ts.size();
    Real sx(0L), sy(0L), sxx(0L), sxy(0L);
    for (size_t i = 0; i < n; ++i) {
        Real x = log(rep.ts[i]);
        sx += x;
        sy += rep.log_abs_residual[i];
        sxx += x * x;
        sxy += x * rep.log_abs_residual[i];
    }
    Real nn((long)n);
    rep.slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    return rep;
}

} // namespace qmf
