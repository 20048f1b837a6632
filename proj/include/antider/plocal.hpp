#pragma once

#include <cstdint>
#include <vector>

#include "antider/complexhp.hpp"
#include "antider/parallel.hpp"
#include "antider/precision.hpp"

namespace antider {

// ---- anchor geometry --------------------------------------------------------

struct AnchorSet {
    unsigned n1 = 0;
    unsigned g = 2;        // nominal genus, recorded for the size check n1 > 9g^2
    Real r1;
    std::vector<Complex> anchors;
    bool small_configuration = false; // n1 <= 9 g^2: warning, not an error

    static AnchorSet roots_of_unity(unsigned n1, unsigned g, const Real& r1);

    // smallest pairwise distance between anchors
    Real min_separation() const;
    // throws ConfigError when disks of radius r1 overlap
    void require_disjoint_disks() const;
};

struct ProjPoint {
    bool infinity = false;
    Complex w; // affine coordinate v1/v0 when finite

    static ProjPoint at(const Complex& w_) { return {false, w_}; }
    static ProjPoint at(const Real& re, const Real& im = Real(0)) {
        return {false, Complex{re, im}};
    }
    static ProjPoint inf() { return {true, Complex{}}; }
};

// Linear form w = a*v0 + b*v1, unit-normalized in the standard Hermitian metric.
struct LinearForm {
    Complex a, b;
};

// Section of unit sup-norm peaking at points[i]: |w(x_i)| = 1, |w(x_j)| < 1
// for j != i in the Fubini-Study metric.
LinearForm distinguishing_section(const std::vector<ProjPoint>& points, std::size_t i);

// Fubini-Study norm of the form at a point.
Real fs_norm(const LinearForm& w, const ProjPoint& x);

// ---- kernel evaluation ------------------------------------------------------

struct KernelParams {
    unsigned m = 1;
    AnchorSet anchors;
    unsigned precision = 256;
    std::vector<Real> b; // real coefficient table, cached at `precision`
};

KernelParams make_kernel_params(unsigned m, AnchorSet anchors, unsigned precision_bits);

// f(x, x') = sum_l b_{m,l} (w(x'))^l / (w(x))^l.  Requires w(x) != 0 and both
// points finite.
Complex kernel_eval(const KernelParams& p, const ProjPoint& x, const ProjPoint& xp);

// Exact-arithmetic variant at Gaussian-rational coordinates.
GaussRat kernel_eval_exact(unsigned m, const GaussRat& wx, const GaussRat& wxp);

// ---- scans ------------------------------------------------------------------

// Where cross-disk samples are drawn: on the unimodular arc through each disk
// (the regime where the decay bound is provable at desk-scale radii), or over
// the full disk (diagnostic mode; the sup may exceed 1 there).
enum class SampleDomain { arc, disk };

struct OffdiagReport {
    std::vector<unsigned> m_list;
    std::vector<Real> sup_abs;          // per-m sup |f|
    std::vector<Real> sup_root;         // per-m sup^{1/m}
    std::vector<unsigned> argmax_i, argmax_j;
    std::vector<Complex> argmax_x, argmax_xp;
    std::vector<std::uint64_t> flagged_ge1; // per-m count of samples with |f| >= 1
    Real rho1_hat;                      // max over m of sup^{1/m}
    Real center_m1_sup;                 // m = 1 sup over anchor centers (closed form)
    bool doubling_ok = false;           // sup(2m) <= sup(m)^2 * 1.05 where applicable
    SampleDomain domain = SampleDomain::arc;
    unsigned samples_per_disk = 0;
    std::uint64_t seed = 0;
};

OffdiagReport offdiag_decay_scan(const AnchorSet& anchors,
                                 const std::vector<unsigned>& m_list,
                                 unsigned samples_per_disk, std::uint64_t seed,
                                 SampleDomain domain, Exec exec);

struct LipschitzViolation {
    unsigned disk = 0;
    Complex x, xp;
    Real delta_abs, deviation, budget;
};

struct LipschitzReport {
    unsigned m = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<LipschitzViolation> violations;
    Real max_ratio;   // max deviation/budget over the trials
    bool vacuous = false;
};

LipschitzReport neardiag_lipschitz_check(const AnchorSet& anchors, unsigned m,
                                         std::uint64_t trials, std::uint64_t seed,
                                         Exec exec);

// ---- proof diagnostics ------------------------------------------------------

struct KernelDiagnostics {
    Real lambda1;
    bool lambda1_infinite = false;
    bool tail_regime = false; // lambda1 >= 2
    Complex head_sum;         // rotated-frame partial sum, l = 0..floor(m/2)
    Complex tail_sum;         // l = floor(m/2)+1..m
    Complex f3_direct;        // w(x)^m * kernel_eval(x, x')
};

KernelDiagnostics kernel_diagnostics(const KernelParams& p, const ProjPoint& x,
                                     const ProjPoint& xp);

} // namespace antider
