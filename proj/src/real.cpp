#include "qmf/real.hpp"

#include <cstring>
#include <stdexcept>
#include <vector>

namespace qmf {

namespace {
thread_local mpfr_prec_t g_prec = 256;
}

mpfr_prec_t working_prec() { return g_prec; }
void set_working_prec(mpfr_prec_t bits) {
    if (bits < 64) bits = 64;
    g_prec = bits;
}

Real Real::from_str(const std::string& s) {
    Real r;
    if (mpfr_set_str(r.v, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real::from_str: cannot parse '" + s + "'");
    return r;
}

std::string Real::str(int digits) const {
    if (digits < 2) digits = 2;
    if (!mpfr_number_p(v)) return mpfr_nan_p(v) ? "nan" : (mpfr_sgn(v) > 0 ? "inf" : "-inf");
    if (mpfr_zero_p(v)) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, v, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    bool neg = !m.empty() && m[0] == '-';
    std::string digs = neg ? m.substr(1) : m;
    // strip trailing zeros but keep at least one digit
    size_t last = digs.find_last_not_of('0');
    digs = digs.substr(0, last == std::string::npos ? 1 : last + 1);
    std::string out = (neg ? "-" : "");
    out += digs.substr(0, 1);
    if (digs.size() > 1) out += "." + digs.substr(1);
    out += "e" + std::to_string((long)(e - 1));
    return out;
}

Real abs(const Real& a) { Real r; mpfr_abs(r.v, a.v, MPFR_RNDN); return r; }
Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.v, a.v, MPFR_RNDN); return r; }
Real exp(const Real& a) { Real r; mpfr_exp(r.v, a.v, MPFR_RNDN); return r; }
Real log(const Real& a) { Real r; mpfr_log(r.v, a.v, MPFR_RNDN); return r; }
Real sin(const Real& a) { Real r; mpfr_sin(r.v, a.v, MPFR_RNDN); return r; }
Real cos(const Real& a) { Real r; mpfr_cos(r.v, a.v, MPFR_RNDN); return r; }
Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.v, y.v, x.v, MPFR_RNDN); return r; }
Real sinh(const Real& a) { Real r; mpfr_sinh(r.v, a.v, MPFR_RNDN); return r; }
Real cosh(const Real& a) { Real r; mpfr_cosh(r.v, a.v, MPFR_RNDN); return r; }
Real pow(const Real& a, const Real& b) { Real r; mpfr_pow(r.v, a.v, b.v, MPFR_RNDN); return r; }
Real pow(const Real& a, long n) { Real r; mpfr_pow_si(r.v, a.v, n, MPFR_RNDN); return r; }
Real floor(const Real& a) { Real r; mpfr_floor(r.v, a.v); return r; }
Real hypot(const Real& x, const Real& y) { Real r; mpfr_hypot(r.v, x.v, y.v, MPFR_RNDN); return r; }
Real gamma_real(const Real& a) { Real r; mpfr_gamma(r.v, a.v, MPFR_RNDN); return r; }

Real pi() { Real r; mpfr_const_pi(r.v, MPFR_RNDN); return r; }
Real euler_gamma() { Real r; mpfr_const_euler(r.v, MPFR_RNDN); return r; }
Real log2_const() { Real r; mpfr_const_log2(r.v, MPFR_RNDN); return r; }

Real pow2(long k) { Real r; mpfr_set_si_2exp(r.v, 1, k, MPFR_RNDN); return r; }

Real pow10(long k) {
    Real ten(10L);
    return pow(ten, k);
}

} // namespace qmf
