#include "qmf/borel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qmf {

const BorelPole& BorelData::pole(size_t i) const {
    {
        std::lock_guard<std::mutex> lk(box->mx);
        if (i < box->poles.size()) return box->poles[i];
        if (!box->gen) throw NumericalError("BorelData: pole stream exhausted");
        box->gen(box->poles, i + 1);
        if (i < box->poles.size()) return box->poles[i];
    }
    throw NumericalError("BorelData: pole generator failed to extend");
}

size_t BorelData::poles_cached() const {
    std::lock_guard<std::mutex> lk(box->mx);
    return box->poles.size();
}

std::string BorelData::to_json(int digits, long npoles) const {
    std::ostringstream os;
    os << "{\"shift\":\"" << shift.str() << "\",\"ell\":" << ell << ",\"head\":[";
    for (size_t i = 0; i < head.size(); ++i) {
        if (i) os << ",";
        os << "[\"" << head[i].re.str(digits) << "\",\"" << head[i].im.str(digits) << "\"]";
    }
    os << "],\"poles\":[";
    for (long i = 0; i < npoles; ++i) {
        const BorelPole& p = pole((size_t)i);
        if (i) os << ",";
        os << "{\"omega\":[\"" << p.omega.re.str(digits) << "\",\"" << p.omega.im.str(digits)
           << "\"],\"stokes\":[\"" << p.stokes.re.str(digits) << "\",\""
           << p.stokes.im.str(digits) << "\"]}";
    }
    os << "]}";
    return os.str();
}

std::vector<Cplx> borel_shift(const std::vector<Cplx>& coeffs, const Rat& kappa) {
    std::vector<Cplx> out;
    out.reserve(coeffs.size());
    for (size_t n = 0; n < coeffs.size(); ++n) {
        Cplx g = complex_gamma(Cplx(Real((long)n) + kappa.to_real()));
        out.push_back(coeffs[n] / g);
    }
    return out;
}

namespace {

Cplx atanh_c(const Cplx& w) { return (log(Cplx(1L) + w) - log(Cplx(1L) - w)) / 2L; }

Cplx atan_c(const Cplx& w) {
    Cplx iw = I_times(w);
    Cplx v = (log(Cplx(1L) + iw) - log(Cplx(1L) - iw)) / 2L;
    return Cplx(v.im, -v.re);  // v / i
}

// Gamma(n+a)/Gamma(n+a+delta) for the supported half-integer offsets.
Real gamma_ratio(const Rat& a, const Rat& delta, long n) {
    Real na = Real(n) + a.to_real();
    if (delta == Rat(0)) return Real(1L);
    if (delta == Rat(1)) return Real(1L) / na;
    Real g1 = gamma_real(na);
    Real g2 = gamma_real(na + delta.to_real());
    return g1 / g2;
}

// Full kernel K(x) = sum_{n>=0} [Gamma(n+a)/Gamma(n+a+delta)] x^n in closed form.
Cplx kernel_closed(const Rat& a, const Rat& delta, const Cplx& x) {
    Cplx one(1L);
    if (delta == Rat(0)) return one / (one - x);
    Real spi = sqrt(pi());
    if (a == Rat(1, 2)) {
        if (delta == Rat(1, 2)) return Cplx(spi) / sqrt(one - x);
        if (delta == Rat(1)) {
            // sum x^n/(n+1/2) = 2 atanh(sqrt x)/sqrt x
            Cplx sx = sqrt(x);
            return Cplx(2L) * atanh_c(sx) / sx;
        }
        if (delta == Rat(3, 2)) return Cplx(2L) * Cplx(spi) * (one - sqrt(one - x)) / x;
    }
    if (a == Rat(1)) {
        if (delta == Rat(1)) return -log(one - x) / x;
        if (delta == Rat(1, 2)) {
            Cplx sx = sqrt(x), s1x = sqrt(one - x);
            return (Cplx(2L) / (sx * s1x)) * atan_c(sx / s1x) / Cplx(spi);
        }
        if (delta == Rat(-1, 2)) {
            Cplx sx = sqrt(x), s1x = sqrt(one - x);
            Cplx at = atan_c(sx / s1x);
            return (at * sx / (s1x * s1x * s1x) + one / (one - x)) / Cplx(spi);
        }
    }
    throw PreconditionError("borel_kernel: unsupported (a, delta) pair");
}

} // namespace

Cplx borel_kernel(const Rat& a, const Rat& delta, long ell, const Cplx& x) {
    Real ax = abs(x);
    if (ax < Real(0.45)) {
        // direct series from n = ell
        Cplx acc(0L);
        Cplx p = pow(x, Real(ell));
        for (long n = ell;; ++n) {
            Cplx term = Cplx(gamma_ratio(a, delta, n)) * p;
            acc += term;
            p = p * x;
            Real cut = (abs(acc) + pow10(-40)) * pow10(-(long)((double)working_prec() * 0.301));
            if (n > ell + 4 && abs(term) < cut) return acc;
            if (n > ell + 4000) return acc;
        }
    }
    Cplx full = kernel_closed(a, delta, x);
    Cplx p(1L);
    for (long n = 0; n < ell; ++n) {
        full -= Cplx(gamma_ratio(a, delta, n)) * p;
        p = p * x;
    }
    return full;
}

BorelData borel_continue(const FormPtr& g, const GroupElement& gamma,
                         const PrecisionContext& ctx, long N_head) {
    ContextScope cs(ctx);
    BorelData B;
    switch (g->cls) {
        case FormClass::cusp_integer:
        case FormClass::cusp_half: {
            B.shift = Rat(1);
            B.ell = 0;
            B.source = g->cls;
            B.gamma = gamma;
            B.tail_C = Real(0L);
            B.tail_p = Real(0L);
            B.tail_gap = Real(1L);
            return B;
        }
        case FormClass::eichler_integer: {
            long kk = 2 - g->weight.num;  // underlying weight
            long N = (N_head > 0) ? N_head : kk - 1;
            AsymptoticSeries phi = asympt_build(g, gamma, N, ctx);
            B.shift = phi.shift;
            B.ell = (long)phi.coeffs.size();
            B.head = phi.coeffs;
            B.source = g->cls;
            B.gamma = phi.gamma;
            B.direction_reversed = phi.direction_reversed;
            B.tail_C = Real(0L);
            B.tail_p = Real(0L);
            B.tail_gap = Real(1L);
            return B;
        }
        case FormClass::eichler_half: {
            AsymptoticSeries phi = asympt_build(g, gamma, N_head > 0 ? N_head : 3, ctx);
            B.shift = phi.shift;  // 2 - k
            B.ell = phi.ell;
            if ((long)phi.coeffs.size() < B.ell)
                phi = asympt_build(g, gamma, B.ell, ctx);
            B.head.assign(phi.coeffs.begin(), phi.coeffs.begin() + B.ell);
            B.source = g->cls;
            B.gamma = phi.gamma;
            B.direction_reversed = phi.direction_reversed;
            const GroupElement gm = phi.gamma;
            FormPtr f = underlying_cusp_form(g);
            Rat k = f->weight;
            Cplx w = slash_multiplier(*f, gm, k);
            long c = gm.c;
            Real c2(c);
            c2 *= Real(c);
            // S_m = 2 (w / c^{2-k}) b_mu zeta_c^{a mu} omega^{k-1}, omega = 2 pi i mu / c^2
            Real two_mk = (Rat(2) - k).to_real();
            Cplx pref = Cplx(2L) * w / Cplx(pow(Real(c), two_mk));
            Rat ac(gm.a, gm.c);
            FormPtr gg = g;
            Real km1 = (k - Rat(1)).to_real();
            B.set_pole_generator([gg, pref, ac, c2, km1](std::vector<BorelPole>& out, size_t need) {
                while (out.size() < need) {
                    const Coef& cf = gg->coef(out.size());
                    Cplx om = I_times(Cplx(2L * pi() * cf.mu.to_real() / c2));
                    Cplx tw = e2pi((cf.mu * ac).frac().to_real(), Real(0L));
                    Cplx S = pref * cf.value() * tw * pow(om, km1);
                    out.push_back(BorelPole{om, S});
                }
            });
            B.tail_C = Real(4.0 * g->growth_C) *
                       pow(c2 / (2L * pi()), g->growth_exponent.to_real());
            B.tail_p = g->growth_exponent.to_real() + km1;
            B.tail_gap = (2L * pi() / c2) * g->exponent_gap.to_real();
            return B;
        }
        case FormClass::maass_periodic:
        case FormClass::eisenstein_periodic: {
            AsymptoticSeries phi = asympt_build(g, gamma, 3, ctx);
            B.shift = Rat(1);
            B.ell = 3;
            B.head = phi.coeffs;
            B.source = g->cls;
            B.gamma = phi.gamma;
            B.has_log_head = phi.has_log_head;
            B.log_alpha = phi.log_alpha;
            long Nf = g->level;
            Real sqrtN = sqrt(Real(Nf));
            FormPtr plus = g;
            FormPtr star = (g->cls == FormClass::eisenstein_periodic) ? g : g->companion;
            // upper ray: companion stream at 2 pi i mu'/N; lower ray: plus stream
            Real scaleN = Real(2L) / sqrtN;
            Real twopiN = 2L * pi() / Real(Nf);
            B.set_pole_generator([plus, star, scaleN, twopiN](
                                     std::vector<BorelPole>& out, size_t need) {
                // interleave the two rays ordered by |omega|
                size_t iu = 0, il = 0;
                for (const BorelPole& p : out)
                    (p.omega.im.sign() > 0 ? iu : il) += 1;
                while (out.size() < need) {
                    const Coef& cu = star->coef(iu);
                    const Coef& cl = plus->coef(il);
                    if (cu.mu < cl.mu) {
                        out.push_back(BorelPole{I_times(Cplx(twopiN * cu.mu.to_real())),
                                                cu.value() * scaleN});
                        ++iu;
                    } else {
                        out.push_back(BorelPole{-I_times(Cplx(twopiN * cl.mu.to_real())),
                                                cl.value() * scaleN});
                        ++il;
                    }
                }
            });
            B.tail_C = Real(2.0 * std::max(plus->growth_C, star->growth_C) / std::sqrt((double)Nf)) *
                       pow(Real(Nf) / (2L * pi()), g->growth_exponent.to_real());
            B.tail_p = g->growth_exponent.to_real();
            B.tail_gap = twopiN * g->exponent_gap.to_real();
            return B;
        }
        default:
            throw PreconditionError("borel_continue: unsupported form class");
    }
}

Cplx eval_borel(const BorelData& B, const Rat& kappa, const Cplx& u, long M,
                const PrecisionContext& ctx, Real* err_out) {
    Real tol = ctx.quad_tol();
    Cplx acc(0L);
    // head: sum_{n<ell} c_n u^n / Gamma(n+kappa)
    Cplx p(1L);
    for (long n = 0; n < (long)B.head.size(); ++n) {
        acc += B.head[(size_t)n] * p / complex_gamma(Cplx(Real(n) + kappa.to_real()));
        p = p * u;
    }
    Rat delta = kappa - B.shift;
    bool canonical = delta == Rat(0);
    Real absu = abs(u);
    Real tail_est(0L);
    long i = 0;
    long hard_cap = std::max<long>(4 * M, 4096);
    for (;; ++i) {
        if (i >= hard_cap) throw NumericalError("eval_borel: pole budget exhausted");
        const BorelPole& pl = B.pole((size_t)i);
        Real aom = abs(pl.omega);
        if (abs(u - pl.omega) < Real(10L) * tol)
            throw PreconditionError("eval_borel: u too close to a pole");
        Cplx r = I_times(pl.stokes) / (2L * pi());  // residue -S/(2 pi i) = iS/(2 pi)
        Cplx x = u / pl.omega;
        Cplx term;
        if (canonical) {
            term = r * pow(x, Real(B.ell)) / (u - pl.omega);
        } else {
            // r/omega * K^{(ell)}entries: B_kappa tail = sum_m (-r_m/omega_m) K^{(ell)}(x)
            term = -(r / pl.omega) * borel_kernel(B.shift, delta, B.ell, x);
        }
        acc += term;
        if (i + 1 >= M && aom > absu * Real(2L)) {
            // geometric-model tail: C |omega|^p (|u|/|omega|)^ell / (|omega|(1 - |u/omega|))
            Real q = absu / aom;
            Real lead = B.tail_C * exp(B.tail_p * log(aom)) * exp(Real(B.ell) * log(q)) /
                        (aom * (Real(1L) - q));
            // ray sum over gaps
            Real count = aom / B.tail_gap;
            tail_est = lead * (Real(2L) + count / Real(std::max(1L, B.ell - 1)));
            if (tail_est < tol || i > 8 * M) break;
        }
    }
    if (!err_out && tail_est >= tol)
        throw NumericalError("eval_borel: pole count insufficient for the tolerance");
    if (err_out) *err_out = tail_est;
    return acc;
}

std::vector<BorelPole> stokes_ray_data(const BorelData& B, const Real& theta, long M) {
    std::vector<BorelPole> out;
    Real tolang = pow10(-12);
    long scanned = 0;
    long budget = 64 * M + 256;
    for (long i = 0; (long)out.size() < M && scanned < budget; ++i, ++scanned) {
        const BorelPole& p = B.pole((size_t)i);
        Real a = arg(p.omega);
        Real d1 = abs(a - theta);
        Real d2 = abs(a - theta + 2L * pi());
        Real d3 = abs(a - theta - 2L * pi());
        if (d1 < tolang || d2 < tolang || d3 < tolang) out.push_back(p);
    }
    return out;  // empty when no stored pole lies on the ray
}

} // namespace qmf
