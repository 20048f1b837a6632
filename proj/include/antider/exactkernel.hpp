#pragma once

#include <utility>
#include <vector>

#include "antider/complexhp.hpp"
#include "antider/precision.hpp"

namespace antider {

// ---- exact binomial / factorial helpers -----------------------------------

Int binom(unsigned n, unsigned k);
Int factorial(unsigned n);
Int int_pow(const Int& base, unsigned e);

// ---- symmetric split of binary forms ---------------------------------------

// Coefficients b_{m,l} of the symmetrized split of v0^m v1^m:
// b[l] = C(m,l)^2 / C(2m,m), l = 0..m.
struct SplitCoefficients {
    unsigned m = 0;
    std::vector<Rat> b;
};
SplitCoefficients split_coefficients(unsigned m);

// Two-slot tensor with exact rational entries.  entry[a][b] multiplies
// (v0^{m-a} v1^a) (x) (v0^{m-b} v1^b); both indices run 0..m.
struct SplitTensor {
    unsigned m = 0;
    std::vector<std::vector<Rat>> entry;

    Rat& at(unsigned a, unsigned b) { return entry[a][b]; }
    const Rat& at(unsigned a, unsigned b) const { return entry[a][b]; }
};

// Split of the scaled monomial C(2m,l) * v0^{2m-l} v1^l (integer entries
// C(m,a)*C(m,b) on the anti-diagonal a + b = l).  Requires l <= 2m.
SplitTensor split_monomial(unsigned m, unsigned l);

// Degree-2m binary form: coeff[l] multiplies v0^{2m-l} v1^l.
struct BinaryForm {
    unsigned m = 0;
    std::vector<Rat> coeff; // size 2m+1
};

// Linear extension of the split to arbitrary degree-2m forms (the unit
// monomial picks up the 1/C(2m,l) normalization).
SplitTensor apply_split(const BinaryForm& f);

// Exact evaluation helpers for tests: plug (s0,s1) into slot one and
// (t0,t1) into slot two.
Rat eval_tensor(const SplitTensor& T, const Rat& s0, const Rat& s1,
                const Rat& t0, const Rat& t1);
// Partial evaluation of slot one only; returns the residual coefficient
// vector over the slot-two index b = 0..m.
std::vector<Rat> eval_first_slot(const SplitTensor& T, const Rat& s0, const Rat& s1);

// ---- rotated frames ---------------------------------------------------------

// Coefficients of (v0 v1)^m expressed in the frame adapted to rho:
// returns c[0..2m] with (v0 v1)^m = sum_i c[i] * u0^{2m-i} u1^i, where
// u0 = (conj(rho) v1 + v0)/sqrt(1+|rho|^2), u1 = (v1 - rho v0)/sqrt(1+|rho|^2).
std::vector<Complex> rotated_frame_coeffs(unsigned m, const Complex& rho);

// Substitute v0 = a u0 + b u1, v1 = c u0 + d u1 into the binary form with
// the given coefficient list (coeff[i] multiplies v0^{n-i} v1^i).
std::vector<Complex> substitute_pair(const std::vector<Complex>& coeff,
                                     const Complex& a, const Complex& b,
                                     const Complex& c, const Complex& d);

// ---- exact coefficient checks ----------------------------------------------

struct CoeffChecks {
    unsigned m = 0;
    bool sum_is_one = false;       // sum_l b_{m,l} == 1
    bool symmetric = false;        // b_{m,l} == b_{m,m-l}
    bool central_integral = false; // C(2m,m) * b_{m,l} in Z
    bool regime1_ok = false;       // C(m,l)/C(2m,l) <= 2^{-l},   0 <= l <= m
    bool regime2_ok = false;       // <= (3/2)^{m/2} 3^{-l},  floor(m/2)+1 <= l <= m
    std::vector<std::pair<unsigned, unsigned>> regime1_failures; // (m,l)
    std::vector<std::pair<unsigned, unsigned>> regime2_failures; // (m,l)
};
CoeffChecks coefficient_checks(unsigned m);

} // namespace antider
