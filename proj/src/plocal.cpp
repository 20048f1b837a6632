#include "antider/plocal.hpp"

#include <algorithm>
#include <limits>

#include "antider/errors.hpp"
#include "antider/exactkernel.hpp"
#include "antider/rng.hpp"

namespace antider {

using boost::multiprecision::abs;
using boost::multiprecision::atan2;
using boost::multiprecision::asin;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {
Real pi_hp() { return atan2(Real(0), Real(-1)); }

// keep sampled points strictly inside open sets
Real interior_factor() { return Real(1) - Real(std::ldexp(1.0, -20)); }
} // namespace

AnchorSet AnchorSet::roots_of_unity(unsigned n1, unsigned g, const Real& r1_) {
    if (n1 == 0) throw ConfigError("anchor set needs at least one anchor");
    if (!(r1_ > 0) || !(r1_ < 1)) throw ConfigError("anchor disk radius must lie in (0,1)");
    AnchorSet s;
    s.n1 = n1;
    s.g = g;
    s.r1 = r1_;
    const Real two_pi = 2 * pi_hp();
    s.anchors.reserve(n1);
    for (unsigned k = 0; k < n1; ++k)
        s.anchors.push_back(polar_cx(Real(1), two_pi * Real(k) / Real(n1)));
    s.small_configuration = (n1 <= 9u * g * g);
    return s;
}

Real AnchorSet::min_separation() const {
    Real best = std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < anchors.size(); ++i)
        for (std::size_t j = i + 1; j < anchors.size(); ++j)
            best = (std::min)(best, abs_cx(anchors[i] - anchors[j]));
    return best;
}

void AnchorSet::require_disjoint_disks() const {
    if (anchors.size() >= 2 && !(min_separation() > 2 * r1))
        throw ConfigError("anchor disks overlap: reduce the disk radius or the anchor count");
}

LinearForm distinguishing_section(const std::vector<ProjPoint>& points, std::size_t i) {
    if (points.size() < 2) throw DomainError("distinguishing section needs at least two points");
    if (i >= points.size()) throw DomainError("distinguishing section: index out of range");
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            const bool dup = (points[a].infinity && points[b].infinity) ||
                             (!points[a].infinity && !points[b].infinity &&
                              points[a].w == points[b].w);
            if (dup) throw DomainError("distinguishing section: duplicate points");
        }
    if (points[i].infinity) return {Complex{}, Complex{Real(1), Real(0)}};
    const Complex& wi = points[i].w;
    const Real s = sqrt(Real(1) + norm2(wi));
    return {Complex{Real(1) / s, Real(0)}, conj(wi) / s};
}

Real fs_norm(const LinearForm& w, const ProjPoint& x) {
    if (x.infinity) return abs_cx(w.b);
    return abs_cx(w.a + w.b * x.w) / sqrt(Real(1) + norm2(x.w));
}

KernelParams make_kernel_params(unsigned m, AnchorSet anchors, unsigned precision_bits) {
    if (m < 1) throw ConfigError("kernel order must be positive");
    if (precision_bits < 64) throw ConfigError("precision must be at least 64 bits");
    PrecisionGuard guard(precision_bits);
    KernelParams p;
    p.m = m;
    p.anchors = std::move(anchors);
    p.precision = precision_bits;
    const auto sc = split_coefficients(m);
    p.b.reserve(m + 1);
    for (const auto& q : sc.b) p.b.push_back(to_real(q));
    return p;
}

namespace {
Complex horner_kernel(const std::vector<Real>& b, const Complex& ratio) {
    Complex acc{b.back(), Real(0)};
    for (std::size_t l = b.size() - 1; l-- > 0;)
        acc = acc * ratio + Complex{b[l], Real(0)};
    return acc;
}
} // namespace

Complex kernel_eval(const KernelParams& p, const ProjPoint& x, const ProjPoint& xp) {
    if (x.infinity || x.w == Complex{})
        throw DomainError("kernel is undefined when the base point sits at 0 or infinity");
    if (xp.infinity)
        throw DomainError("kernel evaluation needs a finite second point");
    return horner_kernel(p.b, xp.w / x.w);
}

GaussRat kernel_eval_exact(unsigned m, const GaussRat& wx, const GaussRat& wxp) {
    if (wx == GaussRat{})
        throw DomainError("kernel is undefined when the base point sits at 0");
    const GaussRat ratio = div_exact(wxp, wx);
    const auto sc = split_coefficients(m);
    GaussRat acc{sc.b[m], Rat(0)};
    for (unsigned l = m; l-- > 0;) {
        acc = acc * ratio;
        acc.re += sc.b[l];
    }
    return acc;
}

// ---- off-diagonal scan ------------------------------------------------------

namespace {
std::vector<std::vector<Complex>> draw_samples(const AnchorSet& A, unsigned spd,
                                               std::uint64_t seed, SampleDomain domain) {
    const Real shrink = interior_factor();
    std::vector<std::vector<Complex>> samples(A.n1);
    for (unsigned i = 0; i < A.n1; ++i) {
        auto& row = samples[i];
        row.reserve(spd);
        row.push_back(A.anchors[i]); // the center always participates
        SplitMix64 gen = substream(seed, 0xA5C0, i);
        if (domain == SampleDomain::arc) {
            if (!(abs(abs_cx(A.anchors[i]) - 1) < Real("1e-30")))
                throw ConfigError("arc sampling requires unimodular anchors");
            const Real theta_i = arg_cx(A.anchors[i]);
            const Real phi_max = 2 * asin(A.r1 / 2) * shrink;
            if (row.size() < spd) row.push_back(polar_cx(Real(1), theta_i + phi_max));
            if (row.size() < spd) row.push_back(polar_cx(Real(1), theta_i - phi_max));
            while (row.size() < spd)
                row.push_back(polar_cx(Real(1), theta_i + gen.uniform(-phi_max, phi_max)));
        } else {
            while (row.size() < spd) {
                const Real rad = A.r1 * sqrt(gen.uniform01()) * shrink;
                const Real ang = gen.uniform(Real(0), 2 * pi_hp());
                row.push_back(A.anchors[i] + polar_cx(rad, ang));
            }
        }
    }
    return samples;
}
} // namespace

OffdiagReport offdiag_decay_scan(const AnchorSet& anchors,
                                 const std::vector<unsigned>& m_list,
                                 unsigned samples_per_disk, std::uint64_t seed,
                                 SampleDomain domain, Exec exec) {
    if (anchors.n1 < 2) throw ConfigError("off-diagonal scan needs at least two anchors");
    if (samples_per_disk < 1) throw ConfigError("need at least one sample per disk");
    if (m_list.empty()) throw ConfigError("empty order list");
    anchors.require_disjoint_disks();

    OffdiagReport rep;
    rep.m_list = m_list;
    rep.domain = domain;
    rep.samples_per_disk = samples_per_disk;
    rep.seed = seed;

    const auto samples = draw_samples(anchors, samples_per_disk, seed, domain);

    // coefficient tables for every requested order
    std::vector<std::vector<Real>> btab;
    btab.reserve(m_list.size());
    for (unsigned m : m_list) {
        const auto sc = split_coefficients(m);
        std::vector<Real> row;
        row.reserve(m + 1);
        for (const auto& q : sc.b) row.push_back(to_real(q));
        btab.push_back(std::move(row));
    }

    const unsigned n1 = anchors.n1;
    const std::size_t npairs = std::size_t(n1) * (n1 - 1);
    const std::size_t M = m_list.size();

    struct Cell {
        Real best;
        Complex bx, bxp;
        std::uint64_t ge1 = 0;
    };
    std::vector<Cell> cells(npairs * M);

    parallel_for(npairs, exec, [&](std::size_t p) {
        const unsigned i = static_cast<unsigned>(p / (n1 - 1));
        unsigned j = static_cast<unsigned>(p % (n1 - 1));
        if (j >= i) ++j;
        for (std::size_t mi = 0; mi < M; ++mi) {
            Cell c;
            c.best = Real(-1);
            for (const Complex& x : samples[i])
                for (const Complex& xp : samples[j]) {
                    const Real v = abs_cx(horner_kernel(btab[mi], xp / x));
                    if (v >= 1) ++c.ge1;
                    if (v > c.best) {
                        c.best = v;
                        c.bx = x;
                        c.bxp = xp;
                    }
                }
            cells[p * M + mi] = c;
        }
    });

    rep.sup_abs.assign(M, Real(-1));
    rep.sup_root.assign(M, Real(0));
    rep.argmax_i.assign(M, 0);
    rep.argmax_j.assign(M, 0);
    rep.argmax_x.assign(M, Complex{});
    rep.argmax_xp.assign(M, Complex{});
    rep.flagged_ge1.assign(M, 0);
    for (std::size_t p = 0; p < npairs; ++p) {
        const unsigned i = static_cast<unsigned>(p / (n1 - 1));
        unsigned j = static_cast<unsigned>(p % (n1 - 1));
        if (j >= i) ++j;
        for (std::size_t mi = 0; mi < M; ++mi) {
            const Cell& c = cells[p * M + mi];
            rep.flagged_ge1[mi] += c.ge1;
            if (c.best > rep.sup_abs[mi]) {
                rep.sup_abs[mi] = c.best;
                rep.argmax_i[mi] = i;
                rep.argmax_j[mi] = j;
                rep.argmax_x[mi] = c.bx;
                rep.argmax_xp[mi] = c.bxp;
            }
        }
    }

    rep.rho1_hat = Real(0);
    for (std::size_t mi = 0; mi < M; ++mi) {
        rep.sup_root[mi] = pow(rep.sup_abs[mi], Real(1) / Real(m_list[mi]));
        rep.rho1_hat = (std::max)(rep.rho1_hat, rep.sup_root[mi]);
    }

    // m = 1 closed-form cross-check over anchor centers
    {
        std::vector<Real> b1 = {Real(1) / 2, Real(1) / 2};
        Real best(-1);
        for (unsigned i = 0; i < n1; ++i)
            for (unsigned j = 0; j < n1; ++j) {
                if (i == j) continue;
                best = (std::max)(best,
                                  abs_cx(horner_kernel(b1, anchors.anchors[j] / anchors.anchors[i])));
            }
        rep.center_m1_sup = best;
    }

    rep.doubling_ok = true;
    for (std::size_t mi = 0; mi + 1 < M; ++mi)
        if (m_list[mi + 1] == 2 * m_list[mi])
            if (!(rep.sup_abs[mi + 1] <= rep.sup_abs[mi] * rep.sup_abs[mi] * Real("1.05")))
                rep.doubling_ok = false;
    return rep;
}

// ---- near-diagonal Lipschitz check -------------------------------------------

LipschitzReport neardiag_lipschitz_check(const AnchorSet& anchors, unsigned m,
                                         std::uint64_t trials, std::uint64_t seed,
                                         Exec exec) {
    if (anchors.n1 < 1) throw ConfigError("need at least one anchor disk");
    LipschitzReport rep;
    rep.m = m;
    rep.trials = trials;
    rep.seed = seed;
    rep.max_ratio = Real(0);
    rep.vacuous = (trials == 0);
    if (rep.vacuous) return rep;

    const auto sc = split_coefficients(m);
    std::vector<Real> b;
    b.reserve(m + 1);
    for (const auto& q : sc.b) b.push_back(to_real(q));

    const Real shrink = interior_factor();
    const Real window = Real(1) / Real(3 * m); // strict sample budget |Δ| < 1/(3m)
    const Real two_pi = 2 * pi_hp();

    struct Row {
        unsigned disk;
        Complex x, xp;
        Real dabs, dev, budget;
        bool violated;
    };
    std::vector<Row> rows(trials);

    parallel_for(trials, exec, [&](std::size_t k) {
        SplitMix64 gen = substream(seed, 0x11F5, k);
        const unsigned disk = static_cast<unsigned>(gen.below(anchors.n1));
        const Complex& center = anchors.anchors[disk];
        const Complex x =
            center + polar_cx(anchors.r1 * sqrt(gen.uniform01()) * shrink,
                              gen.uniform(Real(0), two_pi));
        Real limit = window;
        Complex xp;
        for (;;) {
            const Complex delta =
                polar_cx(limit * sqrt(gen.uniform01()) * shrink, gen.uniform(Real(0), two_pi));
            xp = x + delta;
            if (abs_cx(xp - center) < anchors.r1 * shrink) break;
            limit = limit / 2; // stay inside the open disk; shrink deterministically
        }
        Row r;
        r.disk = disk;
        r.x = x;
        r.xp = xp;
        r.dabs = abs_cx(xp - x);
        r.dev = abs_cx(horner_kernel(b, xp / x) - Complex{Real(1), Real(0)});
        r.budget = 2 * Real(m) * r.dabs;
        r.violated = r.dev > r.budget;
        rows[k] = r;
    });

    for (const Row& r : rows) {
        if (r.budget > 0) rep.max_ratio = (std::max)(rep.max_ratio, Real(r.dev / r.budget));
        if (r.violated)
            rep.violations.push_back({r.disk, r.x, r.xp, r.dabs, r.dev, r.budget});
    }
    return rep;
}

// ---- rotated-frame diagnostics -----------------------------------------------

KernelDiagnostics kernel_diagnostics(const KernelParams& p, const ProjPoint& x,
                                     const ProjPoint& xp) {
    if (x.infinity || x.w == Complex{})
        throw DomainError("kernel is undefined when the base point sits at 0 or infinity");
    if (xp.infinity)
        throw DomainError("kernel evaluation needs a finite second point");

    const unsigned m = p.m;
    const Complex rho = x.w;
    const Complex wp = xp.w;

    KernelDiagnostics d;
    const Complex denom = conj(rho) * wp + Complex{Real(1), Real(0)};
    const Real dn = abs_cx(denom);
    if (dn == 0) {
        d.lambda1 = std::numeric_limits<Real>::infinity();
        d.lambda1_infinite = true;
    } else {
        d.lambda1 = abs_cx(wp - rho) / dn;
    }
    d.tail_regime = d.lambda1_infinite || d.lambda1 >= 2;

    // frame coordinates of x' and of the frame/chart scale factor
    const Real s = sqrt(Real(1) + norm2(rho));
    const Complex u0p = denom / s;
    const Complex u1p = (wp - rho) / s;

    const auto c = rotated_frame_coeffs(m, rho); // c[l] multiplies u0^{2m-l} u1^l
    Real scale(1);
    for (unsigned k = 0; k < m; ++k) scale *= s; // (1+|rho|^2)^{m/2}

    d.head_sum = Complex{};
    d.tail_sum = Complex{};
    for (unsigned l = 0; l <= m; ++l) {
        const Rat ratio = Rat(binom(m, l)) / Rat(binom(2 * m, l));
        const Complex term =
            c[l] * to_real(ratio) * scale * ipow(u0p, m - l) * ipow(u1p, l);
        if (l <= m / 2)
            d.head_sum += term;
        else
            d.tail_sum += term;
    }
    d.f3_direct = ipow(rho, m) * kernel_eval(p, x, xp);
    return d;
}

} // namespace antider
