#include "antider/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "antider/errors.hpp"

namespace antider {

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<Poly> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
    return BiPoly(std::move(out));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    std::vector<Poly> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
    return BiPoly(std::move(out));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return BiPoly();
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return BiPoly(std::move(out));
}

BiPoly operator*(const BiPoly& a, const Rat& s) {
    std::vector<Poly> out = a.c_;
    for (auto& p : out) p = p * s;
    return BiPoly(std::move(out));
}

BiPoly BiPoly::d_dw() const {
    if (c_.size() <= 1) return BiPoly();
    std::vector<Poly> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return BiPoly(std::move(out));
}

BiPoly BiPoly::d_dt() const {
    std::vector<Poly> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].derivative();
    return BiPoly(std::move(out));
}

BiPoly BiPoly::scale_t(const Rat& s) const {
    std::vector<Poly> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].compose_scale(s);
    return BiPoly(std::move(out));
}

std::vector<Complex> BiPoly::wpoly_at(const Complex& tval) const {
    std::vector<Complex> out;
    out.reserve(c_.size());
    for (const auto& p : c_) out.push_back(p.eval(tval));
    while (!out.empty() && out.back() == Complex{Real(0), Real(0)}) out.pop_back();
    return out;
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c_[k].str();
        } else {
            os << "(" << c_[k].str() << ")*w";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

// exact determinant by Gaussian elimination with partial pivoting over Q
Rat rat_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Sylvester resultant of the w-specializations of A and B at t = tval
Rat sylvester_at(const BiPoly& A, const BiPoly& B, const Rat& tval) {
    const int da = A.deg_w();
    const int db = B.deg_w();
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<Rat> ac(static_cast<std::size_t>(da) + 1), bc(static_cast<std::size_t>(db) + 1);
    for (int k = 0; k <= da; ++k) ac[static_cast<std::size_t>(k)] = A.wcoeff(static_cast<unsigned>(k)).eval(tval);
    for (int k = 0; k <= db; ++k) bc[static_cast<std::size_t>(k)] = B.wcoeff(static_cast<unsigned>(k)).eval(tval);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + da - k)] = ac[static_cast<std::size_t>(k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + db - k)] = bc[static_cast<std::size_t>(k)];
    return rat_det(std::move(m));
}

// exact Lagrange interpolation through (nodes[k], values[k])
Poly lagrange(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
    Poly acc;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Poly basis(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == k) continue;
            basis *= Poly({-nodes[j], Rat(1)});
            denom *= nodes[k] - nodes[j];
        }
        acc += basis * (values[k] / denom);
    }
    return acc;
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly acc(Rat(1));
    for (unsigned k = 0; k < e; ++k) acc *= p;
    return acc;
}

} // namespace

Poly resultant_w(const BiPoly& A, const BiPoly& B) {
    if (A.is_zero() || B.is_zero()) return Poly();
    const int da = A.deg_w();
    const int db = B.deg_w();
    if (da == 0 && db == 0) return Poly(Rat(1));
    if (db == 0) return poly_pow(B.wcoeff(0), static_cast<unsigned>(da));
    if (da == 0) return poly_pow(A.wcoeff(0), static_cast<unsigned>(db));

    const int bound = da * std::max(B.deg_t(), 0) + db * std::max(A.deg_t(), 0);
    const std::size_t need = static_cast<std::size_t>(bound) + 1;
    const Poly lca = A.wcoeff(static_cast<unsigned>(da));
    const Poly lcb = B.wcoeff(static_cast<unsigned>(db));

    std::vector<Rat> nodes, values;
    nodes.reserve(need);
    values.reserve(need);
    for (long k = 0; nodes.size() < need; ++k) {
        // walk 0, -1, 1, -2, 2, ...
        const long mag = (k + 1) / 2;
        const Rat tval = (k % 2 == 1) ? Rat(-mag) : Rat(mag);
        // the Sylvester determinant of the specialization only equals the
        // specialized resultant where neither leading w-coefficient vanishes
        if (lca.eval(tval) == 0 || lcb.eval(tval) == 0) continue;
        nodes.push_back(tval);
        values.push_back(sylvester_at(A, B, tval));
    }
    return lagrange(nodes, values);
}

WPoly wpoly_from(const BiPoly& a) {
    WPoly out;
    out.reserve(a.wcoeffs().size());
    for (const auto& p : a.wcoeffs()) out.push_back(RatFn(p));
    return out;
}

void wpoly_trim(WPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int wpoly_deg(const WPoly& a) { return static_cast<int>(a.size()) - 1; }

WPoly wpoly_mul(const WPoly& a, const WPoly& b) {
    if (a.empty() || b.empty()) return {};
    WPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    wpoly_trim(out);
    return out;
}

WPoly wpoly_sub(const WPoly& a, const WPoly& b) {
    WPoly out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    wpoly_trim(out);
    return out;
}

WPoly wpoly_mod(WPoly a, const WPoly& b) {
    wpoly_trim(a);
    if (b.empty()) throw DomainError("reduction modulo the zero polynomial");
    const RatFn inv_lead = RatFn(Rat(1)) / b.back();
    while (wpoly_deg(a) >= wpoly_deg(b)) {
        const std::size_t shift = a.size() - b.size();
        const RatFn f = a.back() * inv_lead;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a.pop_back(); // the top term cancels exactly
        wpoly_trim(a);
    }
    return a;
}

WPoly wpoly_inverse_mod(const WPoly& f, const BiPoly& P) {
    if (!P.monic_in_w()) throw DomainError("modulus must be monic in w");
    // extended Euclid in Q(t)[w]: maintain r = s*f mod P
    WPoly r0 = wpoly_from(P), r1 = wpoly_mod(f, r0);
    WPoly s0 = {}, s1 = {RatFn(Rat(1))};
    while (!r1.empty()) {
        // quotient of r0 by r1
        WPoly q;
        WPoly rem = r0;
        const RatFn inv_lead = RatFn(Rat(1)) / r1.back();
        while (wpoly_deg(rem) >= wpoly_deg(r1)) {
            const std::size_t shift = rem.size() - r1.size();
            const RatFn c = rem.back() * inv_lead;
            if (q.size() < shift + 1) q.resize(shift + 1);
            q[shift] += c;
            for (std::size_t k = 0; k < r1.size(); ++k) rem[shift + k] -= c * r1[k];
            rem.pop_back();
            wpoly_trim(rem);
        }
        WPoly s2 = wpoly_sub(s0, wpoly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (wpoly_deg(r0) != 0)
        throw DomainError("element is not invertible modulo the given modulus");
    WPoly out = s0;
    const RatFn inv = RatFn(Rat(1)) / r0[0];
    for (auto& c : out) c *= inv;
    return wpoly_mod(std::move(out), wpoly_from(P));
}

RatFn trace_mod(const WPoly& h, const BiPoly& P) {
    if (!P.monic_in_w()) throw DomainError("modulus must be monic in w");
    const int d = P.deg_w();
    if (d <= 0) throw DomainError("modulus must have positive degree in w");
    const WPoly pmod = wpoly_from(P);
    RatFn acc;
    WPoly cur = wpoly_mod(h, pmod); // h * w^0 mod P
    for (int j = 0; j < d; ++j) {
        if (static_cast<int>(cur.size()) > j) acc += cur[static_cast<std::size_t>(j)];
        if (j + 1 < d) {
            // multiply by w and reduce
            cur.insert(cur.begin(), RatFn());
            cur = wpoly_mod(std::move(cur), pmod);
        }
    }
    return acc;
}

} // namespace antider
