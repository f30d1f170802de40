#pragma once
#include <cmath>
#include <cstdint>

// Minimal double-double arithmetic. Only what the Mittag-Leffler Taylor
// branch needs: +,-,*,/ plus exp/log/log-gamma on positive arguments and
// sin(pi x) for the reflection formula. Roughly 31 significant digits.
namespace subkal::detail {

struct Dd {
    double hi = 0.0;
    double lo = 0.0;
    Dd() = default;
    Dd(double h) : hi(h), lo(0.0) {}
    Dd(double h, double l) : hi(h), lo(l) {}
    explicit operator double() const { return hi + lo; }
};

inline Dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline Dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Dd operator+(Dd a, Dd b) {
    Dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline Dd operator-(Dd a) { return {-a.hi, -a.lo}; }
inline Dd operator-(Dd a, Dd b) { return a + (-b); }

inline Dd operator*(Dd a, Dd b) {
    Dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline Dd operator/(Dd a, Dd b) {
    double q1 = a.hi / b.hi;
    Dd r = a - Dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - Dd(q2) * b;
    double q3 = r.hi / b.hi;
    Dd q = quick_two_sum(q1, q2);
    return q + Dd(q3);
}

inline bool abs_less(Dd a, Dd b) { return std::fabs(a.hi) < std::fabs(b.hi); }

inline Dd ldexp(Dd a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

inline const Dd kDdLn2{6.931471805599452862e-01, 2.319046813846299558e-17};
inline const Dd kDdPi{3.141592653589793116e+00, 1.224646799147353207e-16};
// 0.5*log(2*pi)
inline const Dd kDdHalfLog2Pi{9.189385332046727418e-01, -3.8782941580672414498e-17};

inline Dd exp_dd(Dd x) {
    if (x.hi < -746.0) return Dd(0.0);
    if (x.hi > 709.0) return Dd(HUGE_VAL);
    double k = std::nearbyint(x.hi / kDdLn2.hi);
    Dd r = x - Dd(k) * kDdLn2;
    r = ldexp(r, -9);                       // |r| <= ln2/1024
    Dd s{1.0};
    Dd term{1.0};
    for (int n = 1; n <= 14; ++n) {
        term = term * r / Dd(double(n));
        s = s + term;
    }
    for (int i = 0; i < 9; ++i) s = s * s;  // undo the /512 scaling
    return ldexp(s, int(k));
}

inline Dd log_dd(Dd x) {
    Dd y{std::log(x.hi)};
    // one Newton step: y <- y + x*exp(-y) - 1
    y = y + x * exp_dd(-y) - Dd(1.0);
    return y;
}

inline Dd sinpi_dd(Dd x) {
    double n = std::nearbyint(x.hi);
    Dd r = x - Dd(n);
    Dd u = kDdPi * r;
    Dd u2 = u * u;
    Dd s = u;
    Dd term = u;
    for (int m = 1; m <= 20; ++m) {
        term = term * u2 / Dd(double(2 * m) * double(2 * m + 1));
        s = (m % 2 == 1) ? s - term : s + term;
    }
    bool odd = std::fabs(std::fmod(n, 2.0)) > 0.5;
    return odd ? -s : s;
}

// Stirling series for a >= 30, recurrence shift below.  Coefficients are
// B_{2n}/(2n(2n-1)) as exact rationals.
inline Dd lgamma_dd(Dd a) {
    static const double num[13] = {1, -1, 1, -1, 1, -691, 1, -3617, 43867,
                                   -174611, 854513, -236364091, 8553103};
    static const double den[13] = {12, 360, 1260, 1680, 1188, 360360, 156,
                                   122400, 244188, 125400, 5796, 1506960, 3900};
    Dd shift{0.0};
    while (a.hi < 30.0) {
        shift = shift + log_dd(a);
        a = a + Dd(1.0);
    }
    Dd inv = Dd(1.0) / a;
    Dd inv2 = inv * inv;
    Dd series{0.0};
    Dd p = inv;
    for (int n = 0; n < 13; ++n) {
        series = series + (Dd(num[n]) / Dd(den[n])) * p;
        p = p * inv2;
    }
    Dd res = (a - Dd(0.5)) * log_dd(a) - a + kDdHalfLog2Pi + series;
    return res - shift;
}

// 1/Gamma(a); exactly 0 at the poles a = 0, -1, -2, ...
inline Dd rgamma_dd(Dd a) {
    if (a.hi >= 0.5) return exp_dd(-lgamma_dd(a));
    // reflection: 1/Gamma(a) = sin(pi a)/pi * Gamma(1-a)
    Dd s = sinpi_dd(a);
    if (s.hi == 0.0 && s.lo == 0.0) return Dd(0.0);
    return s * exp_dd(lgamma_dd(Dd(1.0) - a)) / kDdPi;
}

} // namespace subkal::detail
