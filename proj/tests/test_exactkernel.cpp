#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "antider/errors.hpp"
#include "antider/exactkernel.hpp"
#include "antider/rng.hpp"

using namespace antider;

// ---------------------------------------------------------------------------
// Independent oracles (written against the definitions, not the implementation)
// ---------------------------------------------------------------------------

// Oracle 1: Pascal-triangle recurrence.
static Int pascal_binom(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    std::vector<Int> row = {Int(1)};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Int> next(i + 1, Int(1));
        for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

// Oracle 2: factorial quotient.
static Int fact_binom(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    Rat q = Rat(factorial(n)) / (Rat(factorial(k)) * Rat(factorial(n - k)));
    REQUIRE(denominator(q) == 1);
    return numerator(q);
}

// Oracle 3: slot-subset enumeration of the symmetric split.  Lay out one
// fixed arrangement of the degree-2m product (2m-l copies of v0 followed by
// l copies of v1), send each m-subset of slots to the first tensor factor and
// its complement to the second, and average.  By symmetry of the arrangement
// under slot permutations, the subset-sum does not depend on the arrangement,
// so one arrangement suffices.  Returns the tensor of the SCALED monomial
// C(2m,l) * v0^{2m-l} v1^l to match split_monomial's convention.
static SplitTensor subset_split_oracle(unsigned m, unsigned l) {
    SplitTensor T;
    T.m = m;
    T.entry.assign(m + 1, std::vector<Rat>(m + 1, Rat(0)));
    const unsigned n = 2 * m;
    const std::uint32_t limit = 1u << n;
    const std::uint32_t ones_mask = (l == 0) ? 0u : (((1u << l) - 1u) << (n - l));
    std::vector<Int> count(m + 1, Int(0));
    std::uint32_t s = (1u << m) - 1u; // smallest m-subset
    while (s < limit) {
        const unsigned a = static_cast<unsigned>(__builtin_popcount(s & ones_mask));
        count[a] += 1;
        // Gosper's hack: next bitmask with the same popcount
        const std::uint32_t c = s & static_cast<std::uint32_t>(-static_cast<std::int32_t>(s));
        const std::uint32_t r = s + c;
        if (r >= limit || c == 0) break;
        s = r | (((s ^ r) >> 2) / c);
    }
    const Rat scale = Rat(binom(2 * m, l)) / Rat(binom(2 * m, m));
    for (unsigned a = 0; a <= m; ++a) {
        if (a > l) break;
        const unsigned b = l - a;
        if (b > m) continue;
        T.at(a, b) = scale * Rat(count[a]);
    }
    return T;
}

static bool tensors_equal(const SplitTensor& A, const SplitTensor& B) {
    if (A.m != B.m) return false;
    for (unsigned a = 0; a <= A.m; ++a)
        for (unsigned b = 0; b <= A.m; ++b)
            if (A.at(a, b) != B.at(a, b)) return false;
    return true;
}

// ---------------------------------------------------------------------------

TEST_CASE("binomials agree with the Pascal and factorial oracles") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(6, 3) == 20);
    CHECK(binom(3, 5) == 0);
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            const Int expect = pascal_binom(n, k);
            CHECK(binom(n, k) == expect);
            CHECK(fact_binom(n, k) == expect);
        }
}

TEST_CASE("split coefficients: frozen small tables") {
    const auto b1 = split_coefficients(1);
    REQUIRE(b1.b.size() == 2);
    CHECK(b1.b[0] == Rat(1, 2));
    CHECK(b1.b[1] == Rat(1, 2));

    const auto b2 = split_coefficients(2);
    REQUIRE(b2.b.size() == 3);
    CHECK(b2.b[0] == Rat(1, 6));
    CHECK(b2.b[1] == Rat(2, 3));
    CHECK(b2.b[2] == Rat(1, 6));
}

TEST_CASE("split of the balanced monomial matches the coefficient table") {
    for (unsigned m = 1; m <= 8; ++m) {
        const auto sc = split_coefficients(m);
        const auto T = split_monomial(m, m); // scaled by C(2m,m)
        for (unsigned l = 0; l <= m; ++l) {
            // balanced split places b_{m,l} at slot-one exponent pair index m-l
            CHECK(Rat(T.at(m - l, l)) / Rat(binom(2 * m, m)) == sc.b[l]);
        }
    }
}

TEST_CASE("split_monomial: worked examples") {
    const auto T10 = split_monomial(1, 0);
    CHECK(T10.at(0, 0) == 1);
    CHECK(T10.at(0, 1) == 0);
    CHECK(T10.at(1, 0) == 0);
    CHECK(T10.at(1, 1) == 0);

    const auto T11 = split_monomial(1, 1);
    CHECK(T11.at(0, 1) == 1);
    CHECK(T11.at(1, 0) == 1);
    CHECK(T11.at(0, 0) == 0);
    CHECK(T11.at(1, 1) == 0);

    // upper-branch example: two nonzero entries, coefficient 2 each
    const auto T23 = split_monomial(2, 3);
    CHECK(T23.at(1, 2) == 2);
    CHECK(T23.at(2, 1) == 2);
    Rat total(0);
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; b <= 2; ++b) total += T23.at(a, b);
    CHECK(total == 4); // == C(4,3)

    CHECK_THROWS_AS((void)split_monomial(2, 5), DomainError);
}

TEST_CASE("split_monomial matches the slot-subset oracle up to m = 8") {
    for (unsigned m = 1; m <= 8; ++m)
        for (unsigned l = 0; l <= 2 * m; ++l) {
            const auto got = split_monomial(m, l);
            const auto expect = subset_split_oracle(m, l);
            CHECK(tensors_equal(got, expect));
        }
}

TEST_CASE("entries live on the anti-diagonal a + b = l with binomial values") {
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned l = 0; l <= 2 * m; ++l) {
            const auto T = split_monomial(m, l);
            for (unsigned a = 0; a <= m; ++a)
                for (unsigned b = 0; b <= m; ++b) {
                    if (a + b == l)
                        CHECK(T.at(a, b) == Rat(binom(m, a) * binom(m, b)));
                    else
                        CHECK(T.at(a, b) == 0);
                }
        }
}

TEST_CASE("apply_split is linear and normalizes unit monomials") {
    // unit monomial: picks up 1/C(2m,l)
    BinaryForm f;
    f.m = 2;
    f.coeff = {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}; // v0 v1^3
    const auto A = apply_split(f);
    CHECK(A.at(1, 2) == Rat(2, 4));
    CHECK(A.at(2, 1) == Rat(2, 4));

    // linearity on seeded random forms: split(f+g) = split(f) + split(g)
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const unsigned m = 3;
        BinaryForm g, h, s;
        g.m = h.m = s.m = m;
        g.coeff.resize(2 * m + 1);
        h.coeff.resize(2 * m + 1);
        s.coeff.resize(2 * m + 1);
        for (unsigned i = 0; i <= 2 * m; ++i) {
            g.coeff[i] = Rat(static_cast<long>(rng.below(19)) - 9, 1 + static_cast<long>(rng.below(7)));
            h.coeff[i] = Rat(static_cast<long>(rng.below(19)) - 9, 1 + static_cast<long>(rng.below(7)));
            s.coeff[i] = g.coeff[i] + h.coeff[i];
        }
        const auto G = apply_split(g), H = apply_split(h), S = apply_split(s);
        for (unsigned a = 0; a <= m; ++a)
            for (unsigned b = 0; b <= m; ++b)
                CHECK(S.at(a, b) == G.at(a, b) + H.at(a, b));
    }
}

TEST_CASE("split tensors of distinct monomials are linearly independent") {
    for (unsigned m = 1; m <= 5; ++m) {
        const unsigned dim = (m + 1) * (m + 1);
        std::vector<std::vector<Rat>> rows;
        for (unsigned l = 0; l <= 2 * m; ++l) {
            const auto T = split_monomial(m, l);
            std::vector<Rat> flat;
            flat.reserve(dim);
            for (unsigned a = 0; a <= m; ++a)
                for (unsigned b = 0; b <= m; ++b) flat.push_back(T.at(a, b));
            rows.push_back(std::move(flat));
        }
        // exact Gaussian elimination rank
        unsigned rank = 0;
        std::size_t col = 0;
        for (std::size_t r = 0; r < rows.size() && col < dim; ++col) {
            std::size_t piv = r;
            while (piv < rows.size() && rows[piv][col] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[r], rows[piv]);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (k == r || rows[k][col] == 0) continue;
                const Rat factor = rows[k][col] / rows[r][col];
                for (std::size_t c = col; c < dim; ++c) rows[k][c] -= factor * rows[r][c];
            }
            ++r;
            ++rank;
        }
        CHECK(rank == 2 * m + 1);
    }
}

TEST_CASE("evaluating slot one at a first-coordinate point annihilates high monomials") {
    // at (s0, s1) = (1, 0) only the a = 0 row survives:
    // for l <= m exactly one residual entry (at b = l), for l > m nothing.
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned l = 0; l <= 2 * m; ++l) {
            const auto T = split_monomial(m, l);
            const auto residual = eval_first_slot(T, Rat(1), Rat(0));
            if (l <= m) {
                for (unsigned b = 0; b <= m; ++b) {
                    if (b == l)
                        CHECK(residual[b] == Rat(binom(m, l)));
                    else
                        CHECK(residual[b] == 0);
                }
            } else {
                for (unsigned b = 0; b <= m; ++b) CHECK(residual[b] == 0);
            }
        }
}

TEST_CASE("full tensor evaluation splits multiplicatively") {
    // f5 preserves total evaluation at equal points: evaluating both slots at
    // (s0,s1) returns the scaled monomial's value there.
    const Rat s0(3, 2), s1(-2, 5);
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned l = 0; l <= 2 * m; ++l) {
            const auto T = split_monomial(m, l);
            Rat mono(1);
            for (unsigned k = 0; k < 2 * m - l; ++k) mono *= s0;
            for (unsigned k = 0; k < l; ++k) mono *= s1;
            CHECK(eval_tensor(T, s0, s1, s0, s1) == Rat(binom(2 * m, l)) * mono);
        }
}

TEST_CASE("rotated frame coefficients: worked examples") {
    set_precision_bits(256);
    const auto c0 = rotated_frame_coeffs(1, Complex{Real(0), Real(0)});
    REQUIRE(c0.size() == 3);
    CHECK(c0[0] == Complex{});
    CHECK(c0[1] == Complex{Real(1), Real(0)});
    CHECK(c0[2] == Complex{});

    const auto c1 = rotated_frame_coeffs(1, Complex{Real(1), Real(0)});
    REQUIRE(c1.size() == 3);
    CHECK(boost::multiprecision::abs(c1[0].re - Real("0.5")) < Real("1e-70"));
    CHECK(boost::multiprecision::abs(c1[0].im) < Real("1e-70"));
    CHECK(abs_cx(c1[1]) < Real("1e-70"));
    CHECK(boost::multiprecision::abs(c1[2].re + Real("0.5")) < Real("1e-70"));
    CHECK(boost::multiprecision::abs(c1[2].im) < Real("1e-70"));
}

TEST_CASE("rotated frame coefficients: evaluation oracle and inverse substitution") {
    set_precision_bits(256);
    SplitMix64 rng(99);
    for (unsigned m : {1u, 2u, 5u, 9u}) {
        // random rotation target and a random projective point
        const Complex rho{rng.uniform(Real(-2), Real(2)), rng.uniform(Real(-2), Real(2))};
        const Complex v0{rng.uniform(Real(-1), Real(1)), rng.uniform(Real(-1), Real(1))};
        const Complex v1{rng.uniform(Real(-1), Real(1)), rng.uniform(Real(-1), Real(1))};

        using boost::multiprecision::sqrt;
        const Real s = sqrt(Real(1) + norm2(rho));
        const Complex u0 = (conj(rho) * v1 + v0) / s;
        const Complex u1 = (v1 - rho * v0) / s;

        const auto c = rotated_frame_coeffs(m, rho);
        REQUIRE(c.size() == 2 * m + 1);
        Complex lhs{};
        for (unsigned i = 0; i <= 2 * m; ++i)
            lhs += c[i] * ipow(u0, 2 * m - i) * ipow(u1, i);
        const Complex rhs = ipow(v0 * v1, m);
        CHECK(abs_cx(lhs - rhs) < Real("1e-65"));

        // substituting the frame forms back in recovers the standard
        // coefficients of (v0 v1)^m: a lone 1 in the middle slot
        const auto back = substitute_pair(c, Complex{Real(1) / s, Real(0)}, conj(rho) / s,
                                          -rho / s, Complex{Real(1) / s, Real(0)});
        REQUIRE(back.size() == 2 * m + 1);
        for (unsigned i = 0; i <= 2 * m; ++i) {
            const Real expect = (i == m) ? Real(1) : Real(0);
            CHECK(boost::multiprecision::abs(back[i].re - expect) < Real("1e-65"));
            CHECK(boost::multiprecision::abs(back[i].im) < Real("1e-65"));
        }
    }
}

TEST_CASE("coefficient identity and inequality suite") {
    for (unsigned m = 1; m <= 64; ++m) {
        const auto ck = coefficient_checks(m);
        CHECK(ck.sum_is_one);
        CHECK(ck.symmetric);
        CHECK(ck.central_integral);
        CHECK(ck.regime1_ok);
        if (m >= 2) {
            CHECK(ck.regime2_ok);
        } else {
            // the displayed second bound has a single exact counterexample at
            // (m,l) = (1,1): ratio^2 = 1/4 exceeds bound^2 = 1/6
            CHECK_FALSE(ck.regime2_ok);
            REQUIRE(ck.regime2_failures.size() == 1);
            CHECK(ck.regime2_failures[0].first == 1);
            CHECK(ck.regime2_failures[0].second == 1);
            const Rat ratio = Rat(binom(1, 1)) / Rat(binom(2, 1));
            CHECK(ratio * ratio == Rat(1, 4));
            CHECK(Rat(1, 4) > Rat(1, 6));
        }
        CHECK(ck.regime1_failures.empty());
    }
}

TEST_CASE("regime-2 equality is attained exactly at m = 2, l = 2") {
    // C(2,2)^2 * 2^2 * 3^4 == C(4,2)^2 * 3^2  <=>  324 == 324
    const Int lhs = binom(2, 2) * binom(2, 2) * int_pow(Int(2), 2) * int_pow(Int(3), 4);
    const Int rhs = binom(4, 2) * binom(4, 2) * int_pow(Int(3), 2);
    CHECK(lhs == rhs);
}
