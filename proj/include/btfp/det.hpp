#pragma once

#include <cstdint>

#include "btfp/band.hpp"

namespace btfp {

struct DetResult {
    std::uint32_t value;
    std::uint64_t n;
    /// (n - L - R) mod P(f) for n >= L+R; 0 for the small dense fallback.
    std::uint64_t reduced_exponent;
    /// P(f), the shift-matrix period the reduction used.
    std::uint64_t period;
};

/// Determinant of the order-n member for any n up to 2^63 - 1, in time
/// independent of n: |M| = (-1)^{R e} c_R^e det(T^{e mod P(f)} A | B) with
/// e = n - L - R. The sign uses the true parity of R*e (the mod-P reduction
/// does not preserve parity) and c_R^e reduces mod p-1. Orders below L+R fall
/// back to dense elimination.
DetResult det_fast(const BandSpec& spec, std::uint64_t n);

/// lcm(p-1, P(f)): a period of n -> det_fast(spec, n) on n >= L+R.
/// Not necessarily minimal; see det_period_minimal.
std::uint64_t det_period(const BandSpec& spec);

/// Minimal period of n -> det_fast(spec, n) on n >= L+R: scans the divisors
/// of det_period(spec) against the closed form det = g^e h(e mod P) with
/// g = (-1)^R c_R and h(j) = det(T^j A | B), which covers the entire tail
/// exactly. Requires P(f) <= max_period_table.
std::uint64_t det_period_minimal(const BandSpec& spec, std::uint64_t max_period_table = 1u << 20);

}  // namespace btfp
