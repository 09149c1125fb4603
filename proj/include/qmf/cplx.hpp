#pragma once

#include "qmf/real.hpp"

namespace qmf {

// Complex value at the working precision. Principal branches throughout:
// log, sqrt and non-integer powers cut along the negative real axis.
struct Cplx {
    Real re, im;

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(long r) : re(r) {}
    Cplx(double r) : re(r) {}
    Cplx(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Cplx& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Cplx operator*(const Real& b, const Cplx& a) { return a * b; }
    friend Cplx operator*(const Cplx& a, long b) { return {a.re * b, a.im * b}; }
    friend Cplx operator*(long b, const Cplx& a) { return a * b; }
    friend Cplx operator/(const Cplx& a, const Cplx& b);
    friend Cplx operator/(const Cplx& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Cplx operator/(const Cplx& a, long b) { return {a.re / b, a.im / b}; }

    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
    Cplx& operator*=(const Cplx& o) { *this = *this * o; return *this; }

    std::string str(int digits) const;
};

Cplx conj(const Cplx& a);
Real abs(const Cplx& a);
Real arg(const Cplx& a);
Real norm2(const Cplx& a);
Cplx exp(const Cplx& a);
Cplx log(const Cplx& a);   // principal
Cplx sqrt(const Cplx& a);  // principal
Cplx pow(const Cplx& a, const Real& p);  // principal: exp(p log a)
Cplx pow(const Cplx& a, const Cplx& p);
Cplx inv(const Cplx& a);

Cplx I_times(const Cplx& a);       // i*a
Cplx polar(const Real& r, const Real& theta);

// e^{2 pi i (frac + i y)} with the oscillatory part given as an exact
// rational fraction of a turn; frac is reduced mod 1 by the caller.
Cplx e2pi(const Real& frac_of_turn, const Real& minus_two_pi_y_exponent);

} // namespace qmf
