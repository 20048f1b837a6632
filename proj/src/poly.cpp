#include "antider/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "antider/errors.hpp"

namespace antider {

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Rat& s) {
    if (s == 0) return Poly();
    std::vector<Rat> out = a.c_;
    for (auto& q : out) q *= s;
    return Poly(std::move(out));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    Poly r = *this;
    if (r.degree() < d.degree()) return {Poly(), r};
    std::vector<Rat> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rat(0));
    const Rat inv_lc = Rat(1) / d.lc();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const auto shift = static_cast<unsigned>(r.degree() - d.degree());
        const Rat f = r.lc() * inv_lc;
        q[shift] = f;
        r -= d.shifted(shift) * f;
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = r.monic(); // keep coefficients small along the way
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (Rat(1) / lc());
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rat> out(c_.size() + k, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return Poly(std::move(out));
}

unsigned Poly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<unsigned>(k);
    return 0;
}

bool Poly::integer_coeffs() const {
    for (const auto& q : c_)
        if (denominator(q) != 1) return false;
    return true;
}

Poly Poly::primitive_integer() const {
    if (is_zero()) return Poly();
    Int den_lcm = 1;
    for (const auto& q : c_) den_lcm = boost::multiprecision::lcm(den_lcm, Int(denominator(q)));
    Int num_gcd = 0;
    for (const auto& q : c_)
        num_gcd = boost::multiprecision::gcd(num_gcd, Int(numerator(q) * (den_lcm / denominator(q))));
    Rat factor(den_lcm, num_gcd);
    if (lc() < 0) factor = -factor;
    return *this * factor;
}

Poly Poly::reversed() const {
    std::vector<Rat> out(c_.rbegin(), c_.rend());
    return Poly(std::move(out));
}

Poly Poly::compose_scale(const Rat& s) const {
    if (s == 0) throw DomainError("argument scale must be nonzero");
    std::vector<Rat> out = c_;
    Rat p(1);
    for (std::size_t k = 1; k < out.size(); ++k) {
        p /= s;
        out[k] *= p;
    }
    return Poly(std::move(out));
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] > 0 ? " + " : " - ");
        else if (c_[k] < 0)
            os << "-";
        first = false;
        const Rat a = abs(c_[k]);
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace antider
