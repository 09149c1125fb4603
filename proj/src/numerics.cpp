#include "qmf/numerics.hpp"

#include <cmath>
#include <vector>

namespace qmf {

int kronecker_symbol(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -1;
    }
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    if (v) {
        if (a % 2 == 0) return 0;
        int64_t am8 = ((a % 8) + 8) % 8;
        if ((v & 1) && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    a %= n;
    if (a < 0) a += n;
    while (a) {
        int v2 = 0;
        while (a % 2 == 0) { a /= 2; ++v2; }
        if (v2 & 1) {
            int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        if ((a % 4 == 3) && (n % 4 == 3)) sign = -sign;
        int64_t t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? sign : 0;
}

Cplx eps_d(int64_t d) {
    if (d % 2 == 0) throw PreconditionError("eps_d: d must be odd");
    int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return Cplx(1L);
    return Cplx(0L, 1L);
}

Cplx complex_sin(const Cplx& z) {
    // (e^{iz} - e^{-iz}) / 2i
    Cplx eiz = exp(I_times(z));
    Cplx emiz = exp(I_times(-z));
    Cplx d = eiz - emiz;
    return {d.im / 2L, -d.re / 2L};
}

namespace {

struct SpougeTable {
    mpfr_prec_t prec = 0;
    long a = 0;
    std::vector<Real> c;  // c[0] = sqrt(2 pi), c[k] for k = 1..a-1
};

thread_local SpougeTable g_spouge;

const SpougeTable& spouge_table() {
    mpfr_prec_t prec = working_prec();
    long a = (long)(0.3772 * (double)prec) + 10;
    if (g_spouge.prec == prec && g_spouge.a == a) return g_spouge;
    g_spouge.prec = prec;
    g_spouge.a = a;
    g_spouge.c.clear();
    g_spouge.c.reserve((size_t)a);
    g_spouge.c.push_back(sqrt(2L * pi()));
    Real fact(1L);  // (k-1)!
    for (long k = 1; k < a; ++k) {
        if (k > 1) fact *= (k - 1);
        Real ak = Real(a - k);
        Real ck = pow(ak, Real(k) - Real(1) / 2L) * exp(ak) / fact;
        if (!(k & 1)) ck = -ck;
        g_spouge.c.push_back(ck);
    }
    return g_spouge;
}

bool is_nonpositive_integer(const Cplx& z) {
    if (!z.im.is_zero()) return false;
    if (z.re.sign() > 0) return false;
    Real f = z.re - floor(z.re);
    return f.is_zero();
}

Cplx gamma_right_half(const Cplx& z) {
    const SpougeTable& T = spouge_table();
    Cplx zm1 = z - Cplx(1L);
    Cplx s(T.c[0]);
    for (long k = 1; k < T.a; ++k) s += Cplx(T.c[(size_t)k]) / (zm1 + Cplx(Real(k)));
    Cplx base = zm1 + Cplx(Real(T.a));
    Cplx p = pow(base, zm1 + Cplx(Real(1) / 2L));
    return p * exp(-base) * s;
}

} // namespace

Cplx complex_gamma(const Cplx& rho) {
    if (!rho.is_finite()) throw PreconditionError("complex_gamma: non-finite argument");
    if (is_nonpositive_integer(rho)) throw PreconditionError("complex_gamma: pole at non-positive integer");
    if (rho.re >= Real(1) / 2L) return gamma_right_half(rho);
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    Cplx piz = Cplx(pi()) * rho;
    return Cplx(pi()) / (complex_sin(piz) * gamma_right_half(Cplx(1L) - rho));
}

namespace {

struct BorweinTable {
    mpfr_prec_t prec = 0;
    long n = 0;
    std::vector<Real> d;  // d[0..n]
};

thread_local BorweinTable g_borwein;

const BorweinTable& borwein_table(long n) {
    mpfr_prec_t prec = working_prec();
    if (g_borwein.prec == prec && g_borwein.n >= n) return g_borwein;
    g_borwein.prec = prec;
    g_borwein.n = n;
    g_borwein.d.assign((size_t)n + 1, Real(0L));
    // s_j = (n+j-1)! 4^j / ((n-j)! (2j)!), d_k = n * sum_{j<=k} s_j
    Real s = Real(1L) / Real(n);  // s_0
    Real acc = s;
    g_borwein.d[0] = acc * (long)n;
    for (long j = 1; j <= n; ++j) {
        s *= Real(4L * (n + j - 1)) * Real(n - j + 1);
        s /= Real(2L * j) * Real(2L * j - 1);
        acc += s;
        g_borwein.d[(size_t)j] = acc * (long)n;
    }
    return g_borwein;
}

Cplx zeta_eta_accel(const Cplx& s) {
    double t = std::abs(s.im.to_double());
    double dec_digits = (double)working_prec() * 0.30103;
    double need = dec_digits * 2.302585 + 1.5707963 * t + std::log(1.0 + 2.0 * t) + 8.0;
    long n = (long)(need / 1.7627471740390861) + 4;  // log(3 + sqrt 8)
    const BorweinTable& T = borwein_table(n);
    Cplx sum(0L);
    Cplx mins = -s;
    for (long k = 0; k < n; ++k) {
        Real term = T.d[(size_t)k] - T.d[(size_t)n];
        Cplx kp = (k == 0) ? Cplx(1L) : exp(mins * Cplx(log(Real(k + 1))));
        Cplx contrib = kp * term;
        if (k & 1) sum -= contrib; else sum += contrib;
    }
    // zeta = -sum / (d_n (1 - 2^{1-s}))
    Cplx one_m = Cplx(1L) - exp((Cplx(1L) - s) * Cplx(log2_const()));
    return -(sum / T.d[(size_t)n]) / one_m;
}

} // namespace

Cplx complex_zeta(const Cplx& s) {
    if (s.im.is_zero() && s.re == Real(1L)) throw PreconditionError("complex_zeta: pole at s = 1");
    if (s.is_zero()) return Cplx(Real(-1L) / 2L);
    if (s.re.sign() > 0) return zeta_eta_accel(s);
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    Cplx one_m_s = Cplx(1L) - s;
    Cplx z1 = zeta_eta_accel(one_m_s);
    Cplx g = complex_gamma(one_m_s);
    Cplx sinf = complex_sin(Cplx(pi()) * s / 2L);
    Cplx p2 = exp(s * Cplx(log(Real(2L))));
    Cplx ppi = exp((s - Cplx(1L)) * Cplx(log(pi())));
    return p2 * ppi * sinf * g * z1;
}

Cplx unit_phase(const Rat& q) {
    Rat r = (q / Rat(2)).frac() * Rat(2);  // reduce mod 2
    Real ang = pi() * r.to_real();
    return {cos(ang), sin(ang)};
}

Cplx i_pow(const Rat& p) { return unit_phase(p / Rat(2)); }

} // namespace qmf
