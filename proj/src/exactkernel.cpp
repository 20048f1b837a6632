#include "antider/exactkernel.hpp"

#include <gmp.h>

#include "antider/errors.hpp"

namespace antider {

Int binom(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

Int int_pow(const Int& base, unsigned e) {
    Int acc(1), b(base);
    while (e) {
        if (e & 1) acc *= b;
        if (e >>= 1) b *= b;
    }
    return acc;
}

SplitCoefficients split_coefficients(unsigned m) {
    SplitCoefficients out;
    out.m = m;
    out.b.reserve(m + 1);
    const Int central = binom(2 * m, m);
    for (unsigned l = 0; l <= m; ++l) {
        const Int c = binom(m, l);
        out.b.emplace_back(Rat(c * c) / Rat(central));
    }
    return out;
}

SplitTensor split_monomial(unsigned m, unsigned l) {
    if (l > 2 * m) throw DomainError("split_monomial: exponent index exceeds form degree");
    SplitTensor T;
    T.m = m;
    T.entry.assign(m + 1, std::vector<Rat>(m + 1, Rat(0)));
    if (l <= m) {
        // lower branch: terms indexed by the slot-two exponent l1 = 0..l
        for (unsigned l1 = 0; l1 <= l; ++l1) {
            const unsigned a = l - l1;
            const unsigned b = l1;
            T.at(a, b) += Rat(binom(m, l1) * binom(m, l - l1));
        }
    } else {
        // upper branch: terms indexed by l1 = l..2m
        for (unsigned l1 = l; l1 <= 2 * m; ++l1) {
            const unsigned a = l1 - m;
            const unsigned b = m + l - l1;
            T.at(a, b) += Rat(binom(m, l1 - m) * binom(m, m + l - l1));
        }
    }
    return T;
}

SplitTensor apply_split(const BinaryForm& f) {
    const unsigned m = f.m;
    if (f.coeff.size() != 2 * m + 1)
        throw DomainError("apply_split: coefficient list does not match the declared degree");
    SplitTensor acc;
    acc.m = m;
    acc.entry.assign(m + 1, std::vector<Rat>(m + 1, Rat(0)));
    for (unsigned l = 0; l <= 2 * m; ++l) {
        if (f.coeff[l] == 0) continue;
        const Rat scale = f.coeff[l] / Rat(binom(2 * m, l));
        SplitTensor T = split_monomial(m, l);
        for (unsigned a = 0; a <= m; ++a)
            for (unsigned b = 0; b <= m; ++b)
                if (T.at(a, b) != 0) acc.at(a, b) += scale * T.at(a, b);
    }
    return acc;
}

namespace {
Rat rat_pow(const Rat& x, unsigned e) {
    Rat acc(1), b(x);
    while (e) {
        if (e & 1) acc *= b;
        if (e >>= 1) b *= b;
    }
    return acc;
}
} // namespace

Rat eval_tensor(const SplitTensor& T, const Rat& s0, const Rat& s1,
                const Rat& t0, const Rat& t1) {
    Rat acc(0);
    for (unsigned a = 0; a <= T.m; ++a)
        for (unsigned b = 0; b <= T.m; ++b) {
            if (T.at(a, b) == 0) continue;
            acc += T.at(a, b) * rat_pow(s0, T.m - a) * rat_pow(s1, a) *
                   rat_pow(t0, T.m - b) * rat_pow(t1, b);
        }
    return acc;
}

std::vector<Rat> eval_first_slot(const SplitTensor& T, const Rat& s0, const Rat& s1) {
    std::vector<Rat> out(T.m + 1, Rat(0));
    for (unsigned a = 0; a <= T.m; ++a)
        for (unsigned b = 0; b <= T.m; ++b) {
            if (T.at(a, b) == 0) continue;
            out[b] += T.at(a, b) * rat_pow(s0, T.m - a) * rat_pow(s1, a);
        }
    return out;
}

namespace {
// Convolution product of binary-form coefficient lists.
std::vector<Complex> conv(const std::vector<Complex>& p, const std::vector<Complex>& q) {
    std::vector<Complex> r(p.size() + q.size() - 1, Complex{});
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            r[i + j] += p[i] * q[j];
    return r;
}
} // namespace

std::vector<Complex> rotated_frame_coeffs(unsigned m, const Complex& rho) {
    // (v0 v1)^m = (1+|rho|^2)^{-m} (rho u0^2 + (1-|rho|^2) u0 u1 - conj(rho) u1^2)^m
    const Real n2 = norm2(rho);
    std::vector<Complex> tri = {rho, Complex{Real(1) - n2, Real(0)} , -conj(rho)};
    std::vector<Complex> acc = {Complex{Real(1), Real(0)}};
    for (unsigned k = 0; k < m; ++k) acc = conv(acc, tri);
    Real scale = Real(1);
    const Real denom = Real(1) + n2;
    for (unsigned k = 0; k < m; ++k) scale *= denom;
    for (auto& c : acc) c = c / scale;
    return acc; // size 2m+1
}

std::vector<Complex> substitute_pair(const std::vector<Complex>& coeff,
                                     const Complex& a, const Complex& b,
                                     const Complex& c, const Complex& d) {
    const std::size_t n = coeff.size() - 1;
    std::vector<Complex> out(n + 1, Complex{});
    // Power tables for (a u0 + b u1)^k and (c u0 + d u1)^k.
    std::vector<std::vector<Complex>> P0(n + 1), P1(n + 1);
    P0[0] = {Complex{Real(1), Real(0)}};
    P1[0] = {Complex{Real(1), Real(0)}};
    for (std::size_t k = 1; k <= n; ++k) {
        P0[k] = conv(P0[k - 1], {a, b});
        P1[k] = conv(P1[k - 1], {c, d});
    }
    for (std::size_t i = 0; i <= n; ++i) {
        if (coeff[i] == Complex{}) continue;
        const auto term = conv(P0[n - i], P1[i]);
        for (std::size_t j = 0; j < term.size(); ++j) out[j] += coeff[i] * term[j];
    }
    return out;
}

CoeffChecks coefficient_checks(unsigned m) {
    CoeffChecks out;
    out.m = m;
    const auto sc = split_coefficients(m);
    const Int central = binom(2 * m, m);

    Rat sum(0);
    bool symmetric = true, integral = true;
    for (unsigned l = 0; l <= m; ++l) {
        sum += sc.b[l];
        if (sc.b[l] != sc.b[m - l]) symmetric = false;
        if (denominator(Rat(sc.b[l] * central)) != 1) integral = false;
    }
    out.sum_is_one = (sum == 1);
    out.symmetric = symmetric;
    out.central_integral = integral;

    // regime 1: C(m,l)/C(2m,l) <= 2^{-l}  <=>  C(m,l) * 2^l <= C(2m,l)
    out.regime1_ok = true;
    for (unsigned l = 0; l <= m; ++l) {
        if (binom(m, l) * int_pow(Int(2), l) > binom(2 * m, l)) {
            out.regime1_ok = false;
            out.regime1_failures.emplace_back(m, l);
        }
    }

    // regime 2: C(m,l)/C(2m,l) <= (3/2)^{m/2} * 3^{-l} on floor(m/2)+1..m.
    // Half-integer powers are compared by squaring:
    //   C(m,l)^2 * 2^m * 3^{2l}  <=  C(2m,l)^2 * 3^m
    out.regime2_ok = true;
    for (unsigned l = m / 2 + 1; l <= m; ++l) {
        const Int lhs = binom(m, l) * binom(m, l) * int_pow(Int(2), m) * int_pow(Int(3), 2 * l);
        const Int rhs = binom(2 * m, l) * binom(2 * m, l) * int_pow(Int(3), m);
        if (lhs > rhs) {
            out.regime2_ok = false;
            out.regime2_failures.emplace_back(m, l);
        }
    }
    return out;
}

} // namespace antider
