#pragma once

// Double-double arithmetic for compensated series summation. The value is
// hi + lo with |lo| <= ulp(hi)/2; every operation keeps roughly 106 bits.

#include <cmath>
#include <complex>

namespace helmholtz2d::detail {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
#ifdef __FMA__
    return {p, std::fma(a, b, -p)};
#else
    constexpr double split = 134217729.0;  // 2^27 + 1
    double t = split * a;
    const double ahi = t - (t - a);
    const double alo = a - ahi;
    t = split * b;
    const double bhi = t - (t - b);
    const double blo = b - bhi;
    return {p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo};
#endif
}

inline DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    const DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator*(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    return quick_two_sum(q1, q2) + DD(q3);
}

inline double abs_approx(DD a) { return std::abs(a.hi); }

/// Complex number with double-double components.
struct CDD {
    DD re;
    DD im;

    CDD() = default;
    CDD(DD r, DD i) : re(r), im(i) {}
    CDD(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline CDD operator+(const CDD& a, const CDD& b) { return {a.re + b.re, a.im + b.im}; }
inline CDD operator-(const CDD& a, const CDD& b) { return {a.re - b.re, a.im - b.im}; }

inline CDD operator*(const CDD& a, const CDD& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline CDD operator*(const CDD& a, DD b) { return {a.re * b, a.im * b}; }

inline CDD operator/(const CDD& a, DD b) { return {a.re / b, a.im / b}; }

inline CDD operator/(const CDD& a, const CDD& b) {
    const DD den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

/// Cheap magnitude estimate (double precision) for convergence tests.
inline double abs_approx(const CDD& z) { return std::hypot(z.re.hi, z.im.hi); }

}  // namespace helmholtz2d::detail
