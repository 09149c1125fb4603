#pragma once

#include <mpfr.h>
#include <cstdint>
#include <string>
#include <utility>

namespace qmf {

// Working mantissa precision (bits) for all Real arithmetic on this thread.
// Values carry their own precision; results are produced at the current
// working precision, so a scoped boost affects only what is computed inside.
mpfr_prec_t working_prec();
void set_working_prec(mpfr_prec_t bits);

struct PrecScope {
    mpfr_prec_t saved;
    explicit PrecScope(mpfr_prec_t bits) : saved(working_prec()) { set_working_prec(bits); }
    ~PrecScope() { set_working_prec(saved); }
    PrecScope(const PrecScope&) = delete;
    PrecScope& operator=(const PrecScope&) = delete;
};

class Real {
public:
    mpfr_t v;

    Real() { mpfr_init2(v, working_prec()); mpfr_set_zero(v, 1); }
    Real(const Real& o) { mpfr_init2(v, mpfr_get_prec(o.v)); mpfr_set(v, o.v, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v, MPFR_PREC_MIN); mpfr_swap(v, o.v); }
    Real(long x) { mpfr_init2(v, working_prec()); mpfr_set_si(v, x, MPFR_RNDN); }
    Real(int x) { mpfr_init2(v, working_prec()); mpfr_set_si(v, x, MPFR_RNDN); }
    Real(double x) { mpfr_init2(v, working_prec()); mpfr_set_d(v, x, MPFR_RNDN); }
    ~Real() { mpfr_clear(v); }

    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v, o.v, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v, o.v); return *this; }
    Real& operator=(long x) { mpfr_set_si(v, x, MPFR_RNDN); return *this; }

    static Real from_str(const std::string& s);

    double to_double() const { return mpfr_get_d(v, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v); }
    bool is_finite() const { return mpfr_number_p(v); }
    int sign() const { return mpfr_sgn(v); }

    // Decimal string with the given number of significant digits.
    std::string str(int digits) const;

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v, a.v, b.v, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v, a.v, b.v, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v, a.v, b.v, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v, a.v, b.v, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a) { Real r; mpfr_neg(r.v, a.v, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v, v, o.v, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v, v, o.v, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v, v, o.v, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v, v, o.v, MPFR_RNDN); return *this; }

    friend Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.v, a.v, b, MPFR_RNDN); return r; }
    friend Real operator*(long b, const Real& a) { return a * b; }
    friend Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.v, a.v, b, MPFR_RNDN); return r; }
    friend Real operator/(long b, const Real& a) { Real r; mpfr_si_div(r.v, b, a.v, MPFR_RNDN); return r; }
    friend Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.v, a.v, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.v, a.v, b, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v, b.v); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v, b.v); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v, b.v); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v, b.v); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v, b.v); }
    friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v, b.v); }
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& a);
Real cosh(const Real& a);
Real pow(const Real& a, const Real& b);
Real pow(const Real& a, long n);
Real floor(const Real& a);
Real hypot(const Real& x, const Real& y);
Real gamma_real(const Real& a);

Real pi();
Real euler_gamma();
Real log2_const();

// 2^k as a Real, and ldexp-style scaling
Real pow2(long k);

// 10^(-k) etc. convenience
Real pow10(long k);

} // namespace qmf
