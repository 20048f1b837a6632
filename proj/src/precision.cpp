#include "antider/precision.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace antider {

namespace {
std::atomic<unsigned> g_bits{256};
}

unsigned bits_to_digits10(unsigned bits) {
    // floor(bits * log10(2)), with a small floor so tiny requests stay usable
    return std::max<unsigned>(8, static_cast<unsigned>(bits * 0.30102999566398119));
}

unsigned precision_bits() { return g_bits.load(std::memory_order_relaxed); }

void set_precision_bits(unsigned bits) {
    g_bits.store(bits, std::memory_order_relaxed);
    Real::default_precision(bits_to_digits10(bits));
}

void apply_thread_precision() {
    Real::default_precision(bits_to_digits10(g_bits.load(std::memory_order_relaxed)));
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits); }

} // namespace antider
