#include "qmf/forms.hpp"

#include <cmath>

namespace qmf {

GroupElement::GroupElement(int64_t a_, int64_t b_, int64_t c_, int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) throw PreconditionError("GroupElement: determinant must be 1");
}

Cplx GroupElement::mobius(const Cplx& z) const {
    Cplx num = Cplx(Real(a)) * z + Cplx(Real(b));
    Cplx den = Cplx(Real(c)) * z + Cplx(Real(d));
    return num / den;
}

Rat GroupElement::cusp() const {
    if (c == 0) throw PreconditionError("GroupElement::cusp: c = 0");
    return Rat(-d, c);
}

std::string GroupElement::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
           std::to_string(d) + ")";
}

bool CutPlaneRegion::contains(const Cplx& z) const {
    Cplx w = gamma.j_factor(z);
    if (!w.im.is_zero()) return true;
    return w.re.sign() > 0;
}

Cplx Coef::value() const {
    if (sval) return {Real::from_str(sval->first), Real::from_str(sval->second)};
    Real v = Real((long)(ival >= 0 ? (int64_t)ival : -(int64_t)(-ival)));
    if (ival > INT64_MAX || ival < -((i128)INT64_MAX)) {
        // split 128-bit value
        i128 x = ival;
        bool neg = x < 0;
        if (neg) x = -x;
        Real hi = Real((long)(int64_t)(x >> 62));
        Real lo = Real((long)(int64_t)(x & (((i128)1 << 62) - 1)));
        v = hi * pow2(62) + lo;
        if (neg) v = -v;
    }
    if (mupow.is_zero() || ival == 0) return Cplx(v);
    return Cplx(v * pow(mu.to_real(), mupow.to_real()));
}

Real Coef::abs_value() const {
    if (sval) return abs(value());
    return abs(value().re);
}

const Coef& FormSpec::coef(size_t i) const {
    {
        std::lock_guard<std::mutex> lk(mx);
        if (i < cache.size()) return cache[i];
        if (!gen) throw NumericalError("FormSpec '" + name + "': stream exhausted");
        gen(cache, i + 1);
        if (i < cache.size()) return cache[i];
    }
    throw NumericalError("FormSpec '" + name + "': generator failed to extend");
}

size_t FormSpec::cached() const {
    std::lock_guard<std::mutex> lk(mx);
    return cache.size();
}

std::optional<Rat> FormSpec::phase_for(const GroupElement& gamma) const {
    for (const auto& [g, p] : phase_table)
        if (g == gamma) return p;
    return std::nullopt;
}

namespace {

// Rigorous bound for sum_{mu >= M} C mu^w e^{-2 pi y mu} given gap delta:
// C M^w e^{-aM} / (1 - e^{-delta(a - w/M)}) for M > w/a, a = 2 pi y.
Real growth_tail(const Real& C, const Real& w, const Real& delta, const Real& a, const Real& M) {
    Real awM = a - w / M;
    if (awM.sign() <= 0) return Real(1e300);  // not yet in the decaying regime
    Real lead = C * exp(w * log(M) - a * M);
    Real den = Real(1L) - exp(-(delta * awM));
    return lead / den;
}

EvalResult eval_core(const FormSpec& g, const PrecisionContext& ctx,
                     const std::function<Cplx(const Coef&)>& term_of, const Real& y) {
    if (y.sign() <= 0) throw PreconditionError("eval_qseries: Im z must be positive");
    Real a = 2L * pi() * y;
    // tolerance relative to the leading term so deep-decay evaluations stay
    // accurate inside larger computations
    Real lead = g.coef(0).abs_value() * exp(-(a * g.coef(0).mu.to_real()));
    if (g.constant_term != 0) lead = lead + Real(1L);
    if (lead > Real(1L)) lead = Real(1L);
    Real floor_lead = pow10(-200);
    if (lead < floor_lead) lead = floor_lead;
    Real tol = ctx.series_tail_tol() * lead;
    Real C(g.growth_C);
    Real w = g.growth_exponent.to_real();
    Real delta = g.exponent_gap.is_zero() ? Real(1L) : g.exponent_gap.to_real();
    Cplx sum{Real((long)g.constant_term), Real(0L)};
    const long hard_cap = 4000000;
    EvalResult out;
    for (long i = 0;; ++i) {
        if (i >= hard_cap)
            throw NumericalError("eval_qseries: term budget exceeded for '" + g.name + "'");
        const Coef& cf = g.coef((size_t)i);
        sum += term_of(cf);
        Real M = cf.mu.to_real() + delta;
        Real tail = growth_tail(C, w, delta, a, M);
        if (tail < tol) {
            out.value = sum;
            out.tail_est = tail;
            out.terms = i + 1;
            return out;
        }
    }
}

} // namespace

EvalResult eval_qseries(const FormSpec& g, const Cplx& z, const PrecisionContext& ctx) {
    Real two_pi = 2L * pi();
    auto term = [&](const Coef& cf) -> Cplx {
        Real mu = cf.mu.to_real();
        Real ang = two_pi * mu * z.re;
        Real damp = exp(-(two_pi * mu * z.im));
        return cf.value() * Cplx(damp * cos(ang), damp * sin(ang));
    };
    return eval_core(g, ctx, term, z.im);
}

EvalResult eval_qseries_geodesic(const FormSpec& g, const Rat& x0, const Real& t,
                                 const PrecisionContext& ctx) {
    Real two_pi = 2L * pi();
    auto term = [&](const Coef& cf) -> Cplx {
        Rat frac = (cf.mu * x0).frac();
        Real damp_exp = -(two_pi * cf.mu.to_real() * t);
        return cf.value() * e2pi(frac.to_real(), damp_exp);
    };
    return eval_core(g, ctx, term, t);
}

FormPtr eichler_map(const FormPtr& f) {
    if (f->constant_term != 0)
        throw PreconditionError("eichler_map: form has a constant term");
    auto g = std::make_shared<FormSpec>();
    Rat k = f->weight;
    g->name = f->name + "_eichler";
    g->weight = Rat(2) - k;
    g->level = f->level;
    g->multiplier = f->multiplier;
    g->cls = k.is_integer() ? FormClass::eichler_integer : FormClass::eichler_half;
    g->underlying_weight = k;
    g->growth_exponent = f->growth_exponent + (Rat(1) - k);
    g->growth_C = f->growth_C;
    g->exponent_gap = f->exponent_gap;
    g->phase_table = f->phase_table;
    FormPtr base = f;
    Rat shift = Rat(1) - k;
    g->set_generator([base, shift](std::vector<Coef>& cache, size_t need) {
        while (cache.size() < need) {
            Coef c = base->coef(cache.size());
            c.mupow = c.mupow + shift;
            cache.push_back(std::move(c));
        }
    });
    return g;
}

Cplx slash_multiplier(const FormSpec& g, const GroupElement& gamma, const Rat& kappa) {
    if (auto ph = g.phase_for(gamma)) return unit_phase(Rat(2) * *ph);
    switch (g.multiplier) {
        case MultiplierKind::trivial:
            return Cplx(1L);
        case MultiplierKind::theta: {
            if (kappa.is_integer()) return Cplx(1L);
            if (gamma.d % 2 == 0)
                throw PreconditionError("slash: theta multiplier needs odd d");
            if (g.level % 4 != 0)
                throw PreconditionError("slash: half-integer weight needs 4 | N");
            Rat two_kappa = Rat(2) * kappa;
            if (!two_kappa.is_integer())
                throw PreconditionError("slash: weight must be in (1/2)Z");
            // eps_d^{2 kappa} (c/d)
            Cplx e = eps_d(gamma.d);
            long p = ((two_kappa.num % 4) + 4) % 4;
            Cplx ep(1L);
            for (long i = 0; i < p; ++i) ep = ep * e;
            long kr = kronecker_symbol(gamma.c, gamma.d);
            return ep * Cplx(Real((long)kr));
        }
        case MultiplierKind::phase_table:
            throw PreconditionError("slash: no phase table entry for gamma " + gamma.str() +
                                    " on form '" + g.name + "'");
    }
    return Cplx(1L);
}

Cplx slash(const FormSpec& g, const GroupElement& gamma, const Rat& kappa, const Cplx& z,
           const PrecisionContext& ctx) {
    if (gamma.is_identity()) return eval_qseries(g, z, ctx).value;
    if (gamma.c == 0) {
        // (1, b; 0, 1) up to sign: translation, j-factor d = +-1
        Cplx zs = z + Cplx(Real(gamma.b) / Real(gamma.d));
        Cplx val = eval_qseries(g, zs, ctx).value;
        if (gamma.d == 1) return val;
        return pow(Cplx(Real(gamma.d)), -kappa.to_real()) * val;
    }
    Cplx j = gamma.j_factor(z);
    if (j.im.is_zero() && j.re.sign() <= 0)
        throw PreconditionError("slash: cz+d on the branch cut");
    Cplx gz = gamma.mobius(z);
    if (gz.im.sign() <= 0) throw PreconditionError("slash: gamma z not in the upper half-plane");
    Cplx w = slash_multiplier(g, gamma, kappa);
    return w * pow(j, -kappa.to_real()) * eval_qseries(g, gz, ctx).value;
}

Rat sawtooth(const Rat& x) {
    if (x.is_integer()) return Rat(0);
    return x.frac() - Rat(1, 2);
}

Rat dedekind_S(const Rat& x) {
    int64_t d = x.num, c = x.den;  // lowest terms, c > 0 by Rat invariant
    Rat s(0);
    for (int64_t k = 1; k < c; ++k) {
        Rat t1 = sawtooth(Rat(k, c));
        Rat t2 = sawtooth(Rat::make((i128)k * d, c));
        s = s + t1 * t2;
    }
    return Rat(12) * s;
}

} // namespace qmf
