#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace antider {

// Arbitrary-precision real with runtime-selected precision.  Expression
// templates are off so values behave like plain scalars in containers.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Process-wide working precision in bits.  The underlying default precision
// is thread-local, so worker threads must call apply_thread_precision()
// before touching Real temporaries.
unsigned precision_bits();
void set_precision_bits(unsigned bits);
void apply_thread_precision();
unsigned bits_to_digits10(unsigned bits);

// Temporarily raises (or lowers) precision on the current thread.
struct PrecisionGuard {
    unsigned saved_digits;
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
};

inline Real to_real(const Rat& q) { return static_cast<Real>(q); }
inline Real to_real(const Int& n) { return static_cast<Real>(n); }

} // namespace antider
