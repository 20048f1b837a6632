#pragma once

#include <string>
#include <utility>

#include "antider/precision.hpp"

namespace antider {

// Minimal complex type over an exact or multiprecision scalar.
// std::complex is only specified for built-in floating types, so we keep our
// own.  Division uses Smith's algorithm to stay robust at extreme magnitudes.
template <class T>
struct Cx {
    T re{};
    T im{};

    Cx() : re(0), im(0) {}
    Cx(T r) : re(std::move(r)), im(0) {}
    Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {T(a.re + b.re), T(a.im + b.im)}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {T(a.re - b.re), T(a.im - b.im)}; }
    friend Cx operator-(const Cx& a) { return {T(-a.re), T(-a.im)}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re)};
    }
    friend Cx operator*(const Cx& a, const T& s) { return {T(a.re * s), T(a.im * s)}; }
    friend Cx operator*(const T& s, const Cx& a) { return a * s; }
    friend Cx operator/(const Cx& a, const T& s) { return {T(a.re / s), T(a.im / s)}; }

    Cx& operator+=(const Cx& b) { re += b.re; im += b.im; return *this; }
    Cx& operator-=(const Cx& b) { re -= b.re; im -= b.im; return *this; }
    Cx& operator*=(const Cx& b) { *this = *this * b; return *this; }

    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

template <class T>
Cx<T> conj(const Cx<T>& a) { return {a.re, T(-a.im)}; }

template <class T>
T norm2(const Cx<T>& a) { return T(a.re * a.re + a.im * a.im); }

// Exact division (works for rational scalars too).
template <class T>
Cx<T> div_exact(const Cx<T>& a, const Cx<T>& b) {
    T n = norm2(b);
    return {T((a.re * b.re + a.im * b.im) / n), T((a.im * b.re - a.re * b.im) / n)};
}

using Complex = Cx<Real>;
using GaussRat = Cx<Rat>;

inline Real abs_cx(const Complex& a) {
    using boost::multiprecision::hypot;
    return hypot(a.re, a.im);
}

inline Real arg_cx(const Complex& a) {
    using boost::multiprecision::atan2;
    return atan2(a.im, a.re);
}

// Smith's division: scale by the dominant component of the divisor.
inline Complex operator/(const Complex& a, const Complex& b) {
    using boost::multiprecision::abs;
    if (abs(b.re) >= abs(b.im)) {
        Real r = b.im / b.re;
        Real d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    Real r = b.re / b.im;
    Real d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

inline Complex polar_cx(const Real& r, const Real& theta) {
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    return {r * cos(theta), r * sin(theta)};
}

inline Complex sqrt_cx(const Complex& a) {
    using boost::multiprecision::sqrt;
    Real r = abs_cx(a);
    if (r == 0) return {Real(0), Real(0)};
    if (a.re >= 0) {
        Real t = sqrt((r + a.re) / 2);
        return {t, a.im / (2 * t)};
    }
    Real t = sqrt((r - a.re) / 2);
    if (a.im < 0) t = -t;
    return {a.im / (2 * t), t};
}

// Integer power by repeated squaring; ipow(0, 0) = 1.
template <class T>
Cx<T> ipow(Cx<T> base, unsigned long e) {
    Cx<T> acc{T(1), T(0)};
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

inline Complex ipow_signed(const Complex& base, long e) {
    if (e >= 0) return ipow(base, static_cast<unsigned long>(e));
    return Complex{Real(1), Real(0)} / ipow(base, static_cast<unsigned long>(-e));
}

inline GaussRat to_gauss(const Rat& re, const Rat& im = Rat(0)) { return {re, im}; }

inline Complex to_complex(const GaussRat& q) { return {to_real(q.re), to_real(q.im)}; }

} // namespace antider
