#pragma once

#include <cstdint>

#include "btfp/band.hpp"
#include "btfp/poly.hpp"

namespace btfp::oracle {

/// Brute-force reference implementations used to validate the fast paths.
/// Deliberately naive, and sharing nothing with the fast paths beyond the
/// prime_field arithmetic.

/// Determinant by textbook elimination with row swaps, O(n^3).
std::uint32_t det(const DenseMatrix& m);

/// Gauss-Jordan inverse; product with the input is exactly the identity.
DenseMatrix inverse(const DenseMatrix& m);

/// Smallest q <= bound with x^q = 1 (mod f), by incremental multiplication
/// by x. Requires f(0) != 0; throws NotFoundWithinBound past the bound.
std::uint64_t poly_period(const Poly& f, std::uint64_t bound);

/// Smallest q <= bound with T^q = identity, by literal power iteration of
/// the shift matrix (rebuilt here from the band).
std::uint64_t shift_period(const BandSpec& spec, std::uint64_t bound);

}  // namespace btfp::oracle
