#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qmf/real.hpp"

namespace qmf {

using i128 = __int128;

inline int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { int64_t t = a % b; a = b; b = t; }
    return a;
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
}

// Exact rational with 64-bit reduced numerator/denominator and 128-bit
// intermediates. Throws on overflow instead of silently wrapping.
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(long n) : num(n), den(1) {}
    Rat(int n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) { assign(n, d); }

    void assign(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: overflow");
        num = (int64_t)n;
        den = (int64_t)d;
    }

    static Rat make(i128 n, i128 d) { Rat r; r.assign(n, d); return r; }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    friend Rat operator+(const Rat& a, const Rat& b) { return make((i128)a.num * b.den + (i128)b.num * a.den, (i128)a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return make((i128)a.num * b.den - (i128)b.num * a.den, (i128)a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return make((i128)a.num * b.num, (i128)a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return make((i128)a.num * b.den, (i128)a.den * b.num);
    }
    friend Rat operator-(const Rat& a) { return make(-(i128)a.num, a.den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return (i128)a.num * b.den < (i128)b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat floor_r() const {
        int64_t q = num / den;
        if (num % den != 0 && num < 0) --q;
        return Rat(q);
    }

    // fractional part in [0,1)
    Rat frac() const { return *this - floor_r(); }

    Real to_real() const { return Real(num) / Real(den); }
    double to_double() const { return (double)num / (double)den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat((int64_t)std::stoll(s), 1);
        return Rat((int64_t)std::stoll(s.substr(0, slash)), (int64_t)std::stoll(s.substr(slash + 1)));
    }
};

} // namespace qmf
