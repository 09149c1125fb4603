#include "qmf/cplx.hpp"

namespace qmf {

Cplx operator/(const Cplx& a, const Cplx& b) {
    Real d = norm2(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::string Cplx::str(int digits) const {
    return "(" + re.str(digits) + ", " + im.str(digits) + ")";
}

Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
Real abs(const Cplx& a) { return hypot(a.re, a.im); }
Real arg(const Cplx& a) { return atan2(a.im, a.re); }
Real norm2(const Cplx& a) { return a.re * a.re + a.im * a.im; }

Cplx exp(const Cplx& a) {
    Real m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
}

Cplx log(const Cplx& a) { return {log(abs(a)), arg(a)}; }

Cplx sqrt(const Cplx& a) {
    if (a.im.is_zero() && a.re.sign() >= 0) return Cplx(sqrt(a.re));
    Real r = abs(a);
    Real u = sqrt((r + a.re) / 2L);
    Real w = sqrt((r - a.re) / 2L);
    if (a.im.sign() >= 0) return {u, w};
    return {u, -w};
}

Cplx pow(const Cplx& a, const Real& p) {
    if (a.im.is_zero() && a.re.sign() > 0) return Cplx(pow(a.re, p));
    return exp(Cplx(p) * log(a));
}

Cplx pow(const Cplx& a, const Cplx& p) {
    if (p.im.is_zero()) return pow(a, p.re);
    return exp(p * log(a));
}

Cplx inv(const Cplx& a) {
    Real d = norm2(a);
    return {a.re / d, -a.im / d};
}

Cplx I_times(const Cplx& a) { return {-a.im, a.re}; }

Cplx polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

Cplx e2pi(const Real& frac_of_turn, const Real& minus_e) {
    Real ang = (2L * pi()) * frac_of_turn;
    Real m = exp(minus_e);
    return {m * cos(ang), m * sin(ang)};
}

} // namespace qmf
