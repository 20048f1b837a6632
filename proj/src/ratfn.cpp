#include "antider/ratfn.hpp"

#include <sstream>

namespace antider {

void RatFn::normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    const Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    const Rat lead = den_.lc();
    if (lead != 1) {
        const Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFn::RatFn(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::derivative() const {
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFn RatFn::euler() const {
    RatFn d = derivative();
    return RatFn(d.num_ * Poly::variable(), d.den_);
}

RatFn RatFn::invert_variable() const {
    if (num_.is_zero()) return RatFn();
    const int dn = num_.degree();
    const int dd = den_.degree();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    if (dn > dd)
        d = d.shifted(static_cast<unsigned>(dn - dd));
    else if (dd > dn)
        n = n.shifted(static_cast<unsigned>(dd - dn));
    return RatFn(std::move(n), std::move(d));
}

RatFn RatFn::scale_arg(const Rat& s) const {
    return RatFn(num_.compose_scale(s), den_.compose_scale(s));
}

long RatFn::order_at0() const {
    if (num_.is_zero()) return 0;
    return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

std::vector<Rat> RatFn::laurent_at0(unsigned count) const {
    std::vector<Rat> out(count, Rat(0));
    if (num_.is_zero() || count == 0) return out;
    const unsigned vn = num_.valuation();
    const unsigned vd = den_.valuation();
    // strip the t-powers, then run exact power-series division: with
    // n(t) = d(t) * q(t), the coefficients of q satisfy
    // q_k = (n_k - sum_{j<k} q_j d_{k-j}) / d_0.
    std::vector<Rat> n, d;
    for (int k = static_cast<int>(vn); k <= num_.degree(); ++k) n.push_back(num_.coeff(static_cast<unsigned>(k)));
    for (int k = static_cast<int>(vd); k <= den_.degree(); ++k) d.push_back(den_.coeff(static_cast<unsigned>(k)));
    const Rat inv_d0 = Rat(1) / d[0];
    for (unsigned k = 0; k < count; ++k) {
        Rat acc = k < n.size() ? n[k] : Rat(0);
        for (unsigned j = 0; j < k; ++j) {
            const unsigned i = k - j;
            if (i < d.size()) acc -= out[j] * d[i];
        }
        out[k] = acc * inv_d0;
    }
    return out;
}

Rat RatFn::residue_at0() const {
    const long ord = order_at0();
    if (ord >= 0) return Rat(0);
    const auto coeffs = laurent_at0(static_cast<unsigned>(-ord));
    return coeffs[static_cast<std::size_t>(-ord - 1)];
}

std::string RatFn::str(const char* var) const {
    if (is_polynomial()) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
    return os.str();
}

} // namespace antider
