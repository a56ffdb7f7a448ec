#pragma once

#include <cstdint>
#include <span>

#include "btfp/band.hpp"
#include "btfp/det.hpp"

namespace btfp {

/// Periods above this are refused for the compact representation (the three
/// P x P blocks must stay allocatable); raise on demand if you have the RAM.
inline constexpr std::uint64_t kCompactPeriodCap = 4096;

struct DenseInverse {
    DenseMatrix matrix;
    std::uint32_t det;
};

/// The complete inverse of the order-n member, stored as the three P x P
/// blocks that determine it: every diagonal block equals block_diag, every
/// strictly-upper block equals block_upper, every strictly-lower block equals
/// block_lower, with trailing blocks truncated to n mod P rows/columns.
/// Requires det != 0 and n >= 2P.
class PeriodicInverse {
  public:
    PeriodicInverse(BandSpec spec, std::uint64_t n, std::uint64_t period, std::uint32_t det,
                    DenseMatrix block_diag, DenseMatrix block_upper, DenseMatrix block_lower);

    const BandSpec& spec() const noexcept { return spec_; }
    std::uint64_t order() const noexcept { return n_; }
    std::uint64_t period() const noexcept { return period_; }
    std::uint32_t det() const noexcept { return det_; }
    const DenseMatrix& block_diag() const noexcept { return diag_; }
    const DenseMatrix& block_upper() const noexcept { return upper_; }
    const DenseMatrix& block_lower() const noexcept { return lower_; }

    /// Entry (i, j) of the inverse, 1-based, in O(1): classify the block of
    /// (i, j) as diagonal / upper / lower and look up the local offset.
    std::uint32_t at(std::uint64_t i, std::uint64_t j) const;

    /// Expands to the full n x n matrix; n must be within the dense cap.
    DenseMatrix materialize() const;

    bool operator==(const PeriodicInverse& rhs) const = default;

  private:
    BandSpec spec_;
    std::uint64_t n_, period_;
    std::uint32_t det_;
    DenseMatrix diag_, upper_, lower_;
};

/// The upper-left x_{i,j} (1 <= i <= R, 1 <= j <= L) of the inverse by the
/// cofactor formula: sign * c_R^e / det * det([T^{e mod P} A_i  B; C_{j,i} 0])
/// with e = n - 2L - R and sign parity i + j + (L+R+1)e + (L-1)(n-L) taken
/// over the true integers. Returns an R x L matrix (entry (i-1, j-1) = x_{i,j}).
/// Requires det != 0 (Singular) and n >= 2L + R (OrderTooSmall).
DenseMatrix corner_elements(const BandSpec& spec, std::uint64_t n);

/// One step of the row recurrence: x_{i,j} for j > L from the already-known
/// prefix x_{i,1..j-1} (row_prefix[a-1] = x_{i,a}; indices <= 0 read as 0):
/// x_{i,j} = c_{-L}^{-1} (delta_{i,j-L} - sum_{t=-L+1}^{R} c_t x_{i,j-L-t}).
std::uint32_t row_extend(const BandSpec& spec, std::span<const std::uint32_t> row_prefix,
                         std::uint64_t i, std::uint64_t j);

/// One step of the column recurrence: x_{i,j} for i > R from the known column
/// prefix x_{1..i-1,j} (col_prefix[a-1] = x_{a,j}):
/// x_{i,j} = c_R^{-1} (delta_{i,j+R} - sum_{t=-L}^{R-1} c_t x_{i+t-R,j}).
std::uint32_t col_extend(const BandSpec& spec, std::span<const std::uint32_t> col_prefix,
                         std::uint64_t i, std::uint64_t j);

/// Full n x n inverse: corner, then rows 1..R by the row recurrence, then
/// rows R+1..n by the column recurrence. Orders below 2L+R fall back to
/// plain Gauss-Jordan. Throws Singular / DenseTooLarge.
DenseInverse inverse_dense(const BandSpec& spec, std::uint64_t n);

/// Compact inverse: computes rows 1..P x cols 1..2P plus rows P+1..2P x
/// cols 1..P by corner + recurrences and packages the three defining blocks.
/// Throws Singular, OrderTooSmall (n < 2P), CapacityExceeded.
PeriodicInverse inverse_compact(const BandSpec& spec, std::uint64_t n);

}  // namespace btfp
