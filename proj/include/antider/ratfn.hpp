#pragma once

#include <string>
#include <vector>

#include "antider/errors.hpp"
#include "antider/poly.hpp"

namespace antider {

// Rational function over the exact rationals, kept in lowest terms with a
// monic denominator.
class RatFn {
    Poly num_, den_;
    void normalize();

  public:
    RatFn() : num_(), den_(Rat(1)) {}
    explicit RatFn(Poly numerator) : num_(std::move(numerator)), den_(Rat(1)) {}
    RatFn(Poly numerator, Poly denominator);
    explicit RatFn(const Rat& q) : num_(q), den_(Rat(1)) {}

    static RatFn variable() { return RatFn(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_); }
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    RatFn derivative() const;
    // the derivation t d/dt
    RatFn euler() const;
    // substitution t -> 1/t, again a rational function in t
    RatFn invert_variable() const;
    // substitution t -> t/s
    RatFn scale_arg(const Rat& s) const;

    // order of vanishing at t = 0 (negative at a pole); zero function -> 0
    long order_at0() const;
    // exact coefficients of the Laurent expansion at t = 0, starting at
    // t^{order_at0()}; `count` terms
    std::vector<Rat> laurent_at0(unsigned count) const;
    // coefficient of t^{-1} in the Laurent expansion at t = 0
    Rat residue_at0() const;

    template <class T>
    T eval(const T& x) const {
        T d = den_.eval(x);
        if constexpr (std::is_same_v<T, Rat> || std::is_same_v<T, GaussRat>) {
            if constexpr (std::is_same_v<T, Rat>) {
                if (d == 0) throw DomainError("evaluation at a pole");
                return num_.eval(x) / d;
            } else {
                if (d == T{Rat(0), Rat(0)}) throw DomainError("evaluation at a pole");
                return div_exact(num_.eval(x), d);
            }
        } else {
            return num_.eval(x) / d;
        }
    }

    std::string str(const char* var = "t") const;
};

} // namespace antider
