#pragma once

#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "antider/complexhp.hpp"
#include "antider/precision.hpp"

namespace antider {

template <class T>
T from_rat(const Rat& q) {
    if constexpr (std::is_same_v<T, Rat>)
        return q;
    else if constexpr (std::is_same_v<T, Real>)
        return to_real(q);
    else if constexpr (std::is_same_v<T, Complex>)
        return Complex{to_real(q), Real(0)};
    else if constexpr (std::is_same_v<T, GaussRat>)
        return GaussRat{q, Rat(0)};
    else
        static_assert(!sizeof(T), "unsupported evaluation type");
}

// Dense univariate polynomial over the exact rationals.  The zero polynomial
// is the empty coefficient vector; otherwise the top coefficient is nonzero.
class Poly {
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

  public:
    Poly() = default;
    explicit Poly(const Rat& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit Poly(long constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly variable() { return Poly({Rat(0), Rat(1)}); }
    static Poly monomial(unsigned k, const Rat& coeff = Rat(1)) {
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = coeff;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rat& s);
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }
    friend Poly operator-(const Poly& a) { return a * Rat(-1); }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    // euclidean division by a nonzero divisor: returns {quotient, remainder}
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    static Poly gcd(Poly a, Poly b); // monic
    Poly monic() const;

    Poly shifted(unsigned k) const; // multiply by t^k
    // largest k with t^k dividing the polynomial (0 for the zero polynomial)
    unsigned valuation() const;

    bool integer_coeffs() const;
    // primitive integer form: clears denominators, divides by content, and
    // normalizes the leading coefficient to be positive
    Poly primitive_integer() const;

    Poly reversed() const;                 // t^{deg} * p(1/t)
    Poly compose_scale(const Rat& s) const; // p(t) -> p(t/s)

    template <class T>
    T eval(const T& x) const {
        if (c_.empty()) return from_rat<T>(Rat(0));
        T acc = from_rat<T>(c_.back());
        for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + from_rat<T>(c_[k]);
        return acc;
    }

    std::string str(const char* var = "t") const;
};

} // namespace antider
