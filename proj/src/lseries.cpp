#include "qmf/lseries.hpp"

#include <cmath>

#include "qmf/series.hpp"

namespace qmf {

namespace {

// mu^{-rho} with fast paths for integer and half-integer real rho.
Cplx mu_pow_neg(const Real& mu, const Cplx& rho) {
    if (rho.im.is_zero()) {
        Real r = rho.re;
        Real fl = floor(r);
        if (fl == r) return Cplx(pow(mu, -r.to_long()));
        if (fl + Real(0.5) == r) return Cplx(pow(mu, -(fl.to_long())) / sqrt(mu));
    }
    return exp(-(rho * Cplx(log(mu))));
}

// Tail of sum C mu^p e^{-t mu} over a grid of gap delta past M (valid M > p/t).
Real damped_tail(const Real& C, const Real& p, const Real& delta, const Real& t, const Real& M) {
    Real slack = t - p / M;
    if (slack.sign() <= 0) return Real(1e300);
    Real lead = C * exp(p * log(M) - t * M);
    return lead / (Real(1L) - exp(-(delta * slack)));
}

Real gap_of(const FormSpec& f) {
    return f.exponent_gap.is_zero() ? Real(1L) : f.exponent_gap.to_real();
}

// F(rho0 + k, t) for k = 0..count-1 in one streaming pass.
// out[k] += contributions; truncates via the growth model.
void damped_sum_run(const FormSpec& f, const Rat& twist, const Cplx& rho0, int count,
                    const Real& t, const Real& cut, std::vector<Cplx>& out) {
    Real C(f.growth_C);
    Real w = f.growth_exponent.to_real();
    Real p = w - rho0.re;  // worst (slowest-decaying) power among the run
    if (p.sign() < 0) p = Real(0L);
    Real delta = gap_of(f);
    const long hard_cap = 6000000;
    out.assign((size_t)count, Cplx(0L));
    bool arithmetic = true;  // exponent steps integral multiples of a base gap
    Rat base_gap = f.exponent_gap;
    Real rstep = base_gap.is_zero() ? Real(0L) : exp(-(base_gap.to_real() * t));
    Real damp;
    Rat prev_mu;
    for (long i = 0;; ++i) {
        if (i >= hard_cap) throw NumericalError("damped_sum_run: term budget exceeded");
        const Coef& cf = f.coef((size_t)i);
        Real mu = cf.mu.to_real();
        if (i == 0) {
            damp = exp(-(mu * t));
        } else if (arithmetic && !base_gap.is_zero()) {
            Rat jump = cf.mu - prev_mu;
            Rat steps = jump / base_gap;
            if (steps.is_integer() && steps.num > 0 && steps.num < 64) {
                for (long s = 0; s < steps.num; ++s) damp *= rstep;
            } else {
                damp = exp(-(mu * t));
            }
        } else {
            damp = exp(-(mu * t));
        }
        prev_mu = cf.mu;
        Cplx base = cf.value() * damp;
        if (!twist.is_zero())
            base = base * e2pi((cf.mu * twist).frac().to_real(), Real(0L));
        Cplx mp = mu_pow_neg(mu, rho0);
        Real invmu = Real(1L) / mu;
        for (int k = 0; k < count; ++k) {
            out[(size_t)k] += base * mp;
            if (k + 1 < count) mp = mp * invmu;
        }
        if (i > 4) {
            Real M = mu + delta;
            if (damped_tail(C, p, delta, t, M) < cut) return;
        }
    }
}

} // namespace

Cplx extrapolate_to_zero(const std::vector<Real>& ts, const std::vector<Cplx>& Fs, int order,
                         const std::vector<BasisTerm>& basis, Real* err_out) {
    size_t n = ts.size();
    if (Fs.size() != n || n < 3) throw PreconditionError("extrapolate_to_zero: bad ladder");
    if (basis.empty()) {
        // Neville evaluation at t = 0 of the polynomial through (t_j, F_j)
        std::vector<Cplx> R(Fs);
        int maxm = std::min<int>(order, (int)n - 1);
        Cplx prev(0L);
        for (int m = 1; m <= maxm; ++m) {
            prev = R[n - 1];
            for (size_t j = n - 1; j >= (size_t)m; --j) {
                Real r = ts[j - (size_t)m] / ts[j];
                R[j] = (R[j] * Cplx(r) - R[j - 1]) / Cplx(r - Real(1L));
                if (j == (size_t)m) break;
            }
        }
        if (err_out) *err_out = abs(R[n - 1] - prev);
        return R[n - 1];
    }
    // model: sum over basis terms + polynomial 1..order; coefficient of 1 is the limit
    size_t nb = basis.size() + (size_t)order + 1;
    if (n < nb) throw PreconditionError("extrapolate_to_zero: ladder shorter than basis");
    std::vector<std::vector<Cplx>> A(nb, std::vector<Cplx>(nb + 1, Cplx(0L)));
    for (size_t r = 0; r < nb; ++r) {
        const Real& t = ts[n - nb + r];
        Real lt = log(t);
        size_t cidx = 0;
        for (const BasisTerm& bt : basis) {
            Real col = exp(bt.power * lt);
            for (int e = 0; e < bt.log_pow; ++e) col *= lt;
            A[r][cidx++] = Cplx(col);
        }
        for (int k = 0; k <= order; ++k) A[r][cidx++] = Cplx(pow(t, (long)k));
        A[r][nb] = Fs[n - nb + r];
    }
    size_t limit_col = basis.size();  // the t^0 polynomial column
    for (size_t col = 0; col < nb; ++col) {
        size_t piv = col;
        Real best = abs(A[col][col]);
        for (size_t r = col + 1; r < nb; ++r) {
            Real m = abs(A[r][col]);
            if (m > best) { best = m; piv = r; }
        }
        std::swap(A[col], A[piv]);
        for (size_t r = 0; r < nb; ++r) {
            if (r == col) continue;
            Cplx fac = A[r][col] / A[col][col];
            for (size_t c = col; c <= nb; ++c) A[r][c] -= fac * A[col][c];
        }
    }
    Cplx val = A[limit_col][nb] / A[limit_col][limit_col];
    if (err_out) *err_out = abs(val) * pow10(-(long)((double)working_prec() * 0.15));
    return val;
}

std::vector<LValue> l_series_run(const TwistedLSeries& L, const Cplx& rho0, int count,
                                 const PrecisionContext& ctx, const LValueOptions& opt) {
    ContextScope cs(ctx);
    const FormSpec& f = *L.form;
    Real absc = L.abscissa();
    Real tol = ctx.series_tail_tol();
    if (!opt.allow_deep && opt.basis.empty() && rho0.re <= absc - Real(1L))
        throw PreconditionError("l_series_value: rho below the regularized strip");
    Real cut = opt.cut_override.is_zero() ? tol * pow10(-2) : opt.cut_override;
    std::vector<Real> ts;
    std::vector<std::vector<Cplx>> Fs((size_t)count);
    Real t = opt.t0;
    for (int j = 0; j < opt.points; ++j) {
        ts.push_back(t);
        std::vector<Cplx> row;
        damped_sum_run(f, L.twist, rho0, count, t, cut, row);
        for (int k = 0; k < count; ++k) Fs[(size_t)k].push_back(row[(size_t)k]);
        t = t / 2L;
    }
    std::vector<LValue> out;
    for (int k = 0; k < count; ++k) {
        Real err;
        Cplx v = extrapolate_to_zero(ts, Fs[(size_t)k], opt.order, opt.basis, &err);
        out.push_back({v, err, "abel"});
    }
    return out;
}

LValue l_series_value(const TwistedLSeries& L, const Cplx& rho, const PrecisionContext& ctx,
                      const LValueOptions& opt) {
    ContextScope cs(ctx);
    const FormSpec& f = *L.form;
    Real absc = L.abscissa();
    Real tol = ctx.series_tail_tol();
    if (!opt.allow_deep && opt.basis.empty() && rho.re <= absc - Real(1L))
        throw PreconditionError("l_series_value: rho below the regularized strip");
    if (rho.re - absc > Real(1L) / 2L) {
        Real delta = gap_of(f);
        Real s = rho.re, w = f.growth_exponent.to_real();
        Real Mneed = exp(log(tol * (s - w - Real(1L)) * delta / Real(f.growth_C)) /
                         (w - s + Real(1L)));
        if (Mneed < Real(200000L)) {
            Cplx acc(0L);
            for (long i = 0;; ++i) {
                const Coef& cf = f.coef((size_t)i);
                Real mu = cf.mu.to_real();
                Cplx term = cf.value() * mu_pow_neg(mu, rho);
                if (!L.twist.is_zero())
                    term = term * e2pi((cf.mu * L.twist).frac().to_real(), Real(0L));
                acc += term;
                if (mu > Mneed) {
                    Real tail = Real(f.growth_C) / (delta * (s - w - Real(1L))) *
                                exp((w - s + Real(1L)) * log(mu));
                    if (tail < tol) return {acc, tail, "direct"};
                }
            }
        }
    }
    return l_series_run(L, rho, 1, ctx, opt)[0];
}

GroupElement reflected_gamma(const GroupElement& g) {
    return GroupElement(-g.d, g.b, g.c, -g.a);
}

namespace {

// c^rho Int_{1/c}^oo f(it + x0) t^{rho-1} dt by exp-sinh on x = t - 1/c.
Cplx mellin_piece(const FormSpec& f, const Rat& x0, const Cplx& rho, long c,
                  const PrecisionContext& ctx) {
    Real inv_c = Real(1L) / Real(c);
    Real mu1 = f.coef(0).mu.to_real();
    Real scale = Real(1L) / (2L * pi() * mu1);
    if (scale > Real(4L)) scale = Real(4L);
    auto integrand = [&](const Real& x) -> Cplx {
        Real t = inv_c + x;
        Cplx fr = eval_qseries_geodesic(f, x0, t, ctx).value;
        return fr * exp((rho - Cplx(1L)) * Cplx(log(t)));
    };
    QuadResult r = quad_exp_sinh(integrand, scale, ctx.quad_tol());
    Cplx cpow = exp(rho * Cplx(log(Real(c))));
    return cpow * quad_must(r, "lambda_completed");
}

} // namespace

Cplx lambda_completed(const FormSpec& f, const GroupElement& gamma, const Cplx& rho,
                      const PrecisionContext& ctx, bool reflect_small_t) {
    ContextScope cs(ctx);
    if (f.constant_term != 0)
        throw PreconditionError("lambda_completed: form must be cuspidal");
    if (gamma.c <= 0) throw PreconditionError("lambda_completed: need c > 0");
    long c = gamma.c;
    Rat x0 = gamma.cusp();
    Cplx big = mellin_piece(f, x0, rho, c, ctx);
    if (!reflect_small_t) {
        // t -> 1/(c^2 t) maps (0, 1/c] to [1/c, oo); the integrand stays a
        // decaying q-series evaluated at height 1/(c^2 t). Heights needing an
        // unreasonable term budget are cut off; the cutoff tail is bounded by
        // the observed cusp decay and must stay below the quadrature target.
        Real inv_c = Real(1L) / Real(c);
        Real c2 = Real(c) * Real(c);
        Real gap = f.exponent_gap.is_zero() ? Real(1L) : f.exponent_gap.to_real();
        Real digits10((long)(ctx.digits() + 30));
        Real h_min = digits10 * Real(2.303) / (2L * pi() * Real(8000L) * gap);
        Real T_big = Real(1L) / (c2 * h_min);
        if (T_big < Real(2L) / Real(c)) T_big = Real(2L) / Real(c);
        auto integrand = [&](const Real& x) -> Cplx {
            Real t = inv_c + x;
            if (t > T_big) return Cplx(0L);
            Real height = Real(1L) / (c2 * t);
            Cplx fr = eval_qseries_geodesic(f, x0, height, ctx).value;
            return fr * exp((-rho - Cplx(1L)) * Cplx(log(t)));
        };
        // the cancellation floor of the sharply decaying evaluations limits
        // what the quadrature can resolve; loosen the target accordingly
        Real floor_est;
        {
            Real hq = Real(1L) / (c2 * (Real(2L) / Real(c)));
            EvalResult probe = eval_qseries_geodesic(f, x0, hq, ctx);
            floor_est = probe.tail_est * Real(8L);
        }
        Real tol_small = ctx.quad_tol();
        if (floor_est > tol_small) tol_small = floor_est;
        QuadResult r = quad_exp_sinh(integrand, Real(1L) / Real(c), tol_small);
        Cplx small = exp(-(rho * Cplx(log(Real(c))))) * quad_must(r, "lambda_completed small-t");
        // boundary decay check at the cutoff height; a boundary value at the
        // cancellation floor of the working precision counts as observed decay
        Real hb = Real(1L) / (c2 * T_big);
        EvalResult fe = eval_qseries_geodesic(f, x0, hb, ctx);
        Real fb = abs(fe.value);
        Real absmass = Real(f.growth_C) * gamma_real(f.growth_exponent.to_real() + Real(1L)) /
                       (gap * exp((f.growth_exponent.to_real() + Real(1L)) * log(2L * pi() * hb)));
        Real noise_floor = pow2(-(long)working_prec() + 10) * absmass + fe.tail_est;
        if (fb > Real(4L) * noise_floor) {
            Real tail_bound = fb * exp((-rho.re) * log(T_big)) * T_big * Real(4L);
            Real scale_ref = abs(big) + abs(small) + pow10(-4);
            if (tail_bound > ctx.quad_tol() * scale_ref)
                throw NumericalError(
                    "lambda_completed: cusp decay unobservable within the direct small-t budget; "
                    "use the reflected form (known multiplier) for this twist");
        }
        return big + small;
    }
    Rat k = f.weight;
    Cplx w = slash_multiplier(f, gamma, k);
    Rat ac(gamma.a, gamma.c);
    Cplx refl = mellin_piece(f, ac, Cplx(k.to_real()) - rho, c, ctx);
    return big + w * i_pow(-k) * refl;
}

Cplx lambda_reflect(const FormSpec& f, const GroupElement& gamma, const Cplx& rho,
                    const PrecisionContext& ctx) {
    Rat k = f.weight;
    Cplx w = slash_multiplier(f, gamma, k);
    GroupElement gr = reflected_gamma(gamma);
    Cplx lam = lambda_completed(f, gr, Cplx(k.to_real()) - rho, ctx, false);
    return i_pow(-k) * w * lam;
}

Cplx zeta_squared(const Cplx& rho, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    if (rho.im.is_zero() && rho.re == Real(1L))
        throw PreconditionError("zeta_squared: pole at rho = 1");
    if (rho.is_zero()) return Cplx(Real(1L) / 4L);
    if (rho.re.sign() > 0) {
        Cplx z = complex_zeta(rho);
        return z * z;
    }
    if (rho.im.is_zero()) {
        Real fl = floor(rho.re);
        if (fl == rho.re) {
            long n = fl.to_long();
            if (n < 0 && (n % 2 == 0)) return Cplx(0L);  // trivial double zeros
        }
    }
    Cplx one_m = Cplx(1L) - rho;
    Cplx z1 = complex_zeta(one_m);
    Cplx g1 = complex_gamma(one_m / 2L);
    Cplx g0 = complex_gamma(rho / 2L);
    Cplx pipow = exp((rho + rho - Cplx(1L)) * Cplx(log(pi())));
    Cplx gr = g1 / g0;
    return pipow * gr * gr * z1 * z1;
}

MaassLSeries MaassLSeries::sigma_pair() {
    MaassLSeries M;
    M.plus = catalog_form("sigma");
    M.minus = catalog_form("sigma_star");
    M.minus_scale = Rat(-1, 2);
    M.spectral_s = Rat(1, 2);
    return M;
}

MaassLSeries MaassLSeries::eisenstein_pair() {
    MaassLSeries M;
    auto f = std::make_shared<FormSpec>();
    f->name = "divisor_stream";
    f->weight = Rat(1);
    f->cls = FormClass::generic;
    f->growth_exponent = Rat(1);
    f->growth_C = 1.0;
    f->exponent_gap = Rat(1);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        long N = (long)std::max<size_t>(2 * need + 16, 256);
        auto d = series::divisor_counts(N);
        cache.clear();
        for (long n = 1; n <= N; ++n)
            cache.push_back(Coef{Rat(n), (i128)d[(size_t)n], Rat(0), nullptr});
    });
    M.plus = f;
    M.minus = f;
    M.minus_scale = Rat(1);
    M.spectral_s = Rat(1, 2);
    return M;
}

Cplx maass_gamma_factor(const Cplx& rho, const PrecisionContext& ctx) {
    ContextScope cs(ctx);
    Cplx g = complex_gamma(rho / 2L);
    Cplx pipow = exp(-(rho * Cplx(log(pi()))));
    return pipow * g * g / 4L;
}

std::vector<LValue> maass_L_run(const MaassLSeries& M, int eps, const Cplx& rho0, int count,
                                const PrecisionContext& ctx, const LValueOptions& opt) {
    if (M.spectral_s != Rat(1, 2))
        throw PreconditionError("maass_L: only s = 1/2 is supported");
    if (eps != 0 && eps != 1) throw PreconditionError("maass_L: eps must be 0 or 1");
    LValueOptions o = opt;
    o.allow_deep = true;
    TwistedLSeries Lp{M.plus, Rat(0)};
    std::vector<LValue> vp = l_series_run(Lp, rho0, count, ctx, o);
    if (M.minus == M.plus) {
        std::vector<LValue> out;
        for (auto& v : vp) {
            if (eps == 1) out.push_back({Cplx(0L), Real(0L), "symmetric"});
            else out.push_back({v.value * 2L, v.err_est * 2L, v.method});
        }
        return out;
    }
    TwistedLSeries Lm{M.minus, Rat(0)};
    std::vector<LValue> vm = l_series_run(Lm, rho0, count, ctx, o);
    std::vector<LValue> out;
    Real sc = M.minus_scale.to_real();
    for (int k = 0; k < count; ++k) {
        Cplx scaled = vm[(size_t)k].value * sc;
        Cplx v = (eps == 0) ? vp[(size_t)k].value + scaled : vp[(size_t)k].value - scaled;
        out.push_back({v, vp[(size_t)k].err_est + vm[(size_t)k].err_est, vp[(size_t)k].method});
    }
    return out;
}

LValue maass_L(const MaassLSeries& M, int eps, const Cplx& rho, const PrecisionContext& ctx,
               const LValueOptions& opt) {
    return maass_L_run(M, eps, rho, 1, ctx, opt)[0];
}

Cplx maass_reflect(const MaassLSeries& M, int eps, const Cplx& rho, const PrecisionContext& ctx,
                   const LValueOptions& inner_opt) {
    ContextScope cs(ctx);
    Cplx one_m = Cplx(1L) - rho;
    LValue far = maass_L(M, eps, one_m, ctx, inner_opt);
    Cplx lam = maass_gamma_factor(one_m + Cplx(Real((long)eps)), ctx) * far.value;
    if (eps == 1) lam = -lam;
    return lam / maass_gamma_factor(rho + Cplx(Real((long)eps)), ctx);
}

} // namespace qmf
