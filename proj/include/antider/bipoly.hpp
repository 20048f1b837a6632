#pragma once

#include <string>
#include <vector>

#include "antider/poly.hpp"
#include "antider/ratfn.hpp"

namespace antider {

// Bivariate polynomial in (t, w) over the exact rationals, stored densely by
// w-power with Poly coefficients in t.  Zero is the empty vector.
class BiPoly {
    std::vector<Poly> c_; // c_[k] multiplies w^k

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

  public:
    BiPoly() = default;
    explicit BiPoly(Poly constant_in_w) {
        if (!constant_in_w.is_zero()) c_.push_back(std::move(constant_in_w));
    }
    explicit BiPoly(const Rat& q) : BiPoly(Poly(q)) {}
    explicit BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

    static BiPoly var_w() { return BiPoly(std::vector<Poly>{Poly(), Poly(Rat(1))}); }
    static BiPoly var_t() { return BiPoly(Poly::variable()); }

    int deg_w() const { return static_cast<int>(c_.size()) - 1; }
    int deg_t() const {
        int d = -1;
        for (const auto& p : c_) d = std::max(d, p.degree());
        return d;
    }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Poly>& wcoeffs() const { return c_; }
    Poly wcoeff(unsigned k) const { return k < c_.size() ? c_[k] : Poly(); }
    // true when the top w-coefficient is the constant 1
    bool monic_in_w() const { return !c_.empty() && c_.back() == Poly(Rat(1)); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Rat& s);
    friend BiPoly operator-(const BiPoly& a) { return a * Rat(-1); }
    BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
    BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
    BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly d_dw() const;
    BiPoly d_dt() const;
    BiPoly scale_t(const Rat& s) const; // t -> t/s

    template <class T>
    T eval(const T& tval, const T& wval) const {
        if (c_.empty()) return from_rat<T>(Rat(0));
        T acc = c_.back().eval(tval);
        for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * wval + c_[k].eval(tval);
        return acc;
    }

    // coefficients (by w-power) of the specialization t = tval
    std::vector<Complex> wpoly_at(const Complex& tval) const;

    std::string str() const;
};

// Resultant with respect to w, computed exactly (evaluation at integer points
// followed by interpolation).  Row convention: deg_w(B) rows of A-coefficients
// over deg_w(A) rows of B-coefficients, both in descending w-order.
Poly resultant_w(const BiPoly& A, const BiPoly& B);

// --- dense polynomials in w over the rational-function field Q(t) ---

using WPoly = std::vector<RatFn>; // by w-power, trimmed

WPoly wpoly_from(const BiPoly& a);
void wpoly_trim(WPoly& a);
int wpoly_deg(const WPoly& a);
WPoly wpoly_mul(const WPoly& a, const WPoly& b);
WPoly wpoly_sub(const WPoly& a, const WPoly& b);
// remainder of a modulo b (leading coefficient of b must be a nonzero RatFn)
WPoly wpoly_mod(WPoly a, const WPoly& b);
// inverse of f modulo the monic-in-w modulus P; DomainError when gcd(f, P) is
// not constant
WPoly wpoly_inverse_mod(const WPoly& f, const BiPoly& P);
// trace of the multiplication-by-h endomorphism of Q(t)[w]/(P), P monic in w
RatFn trace_mod(const WPoly& h, const BiPoly& P);

} // namespace antider
