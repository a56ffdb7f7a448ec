#pragma once

#include <cstdint>
#include <vector>

#include "btfp/dense.hpp"
#include "btfp/poly.hpp"

namespace btfp {

/// Orders above this are refused for dense materialization; the fast paths
/// themselves have no order cap below 2^63 - 1.
inline constexpr std::uint64_t kDenseOrderCap = 4096;

/// A whole family of banded Toeplitz matrices over F_p, one per order n:
/// prime p, lower half-bandwidth L, upper half-bandwidth R, and the band
/// coefficients c_{-L},...,c_0,...,c_R. Requires c_{-L} != 0 and c_R != 0.
class BandSpec {
  public:
    BandSpec(PrimeField field, unsigned lower, std::vector<std::uint32_t> coeffs);

    const PrimeField& field() const noexcept { return field_; }
    unsigned lower() const noexcept { return lower_; }
    unsigned upper() const noexcept { return upper_; }
    unsigned bandwidth() const noexcept { return lower_ + 1 + upper_; }

    /// c_t for any integer offset; zero outside [-L, R].
    std::uint32_t coeff(long long t) const noexcept {
        long long idx = t + lower_;
        return (idx >= 0 && idx < static_cast<long long>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(idx)]
                                                                          : 0;
    }

    /// c_{-L}..c_R ascending.
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const BandSpec& rhs) const = default;

  private:
    PrimeField field_;
    unsigned lower_, upper_;
    std::vector<std::uint32_t> coeffs_;
};

/// The n x n member of the family: entry (i,j) = c_{j-i} inside the band,
/// zero outside. Throws DenseTooLarge above kDenseOrderCap.
DenseMatrix materialize(const BandSpec& spec, std::uint64_t n);

/// f(x) = c_R x^{L+R} + ... + c_{-L+1} x + c_{-L}: the band's coefficients
/// read ascending, which is also the feedback rule of the associated shift
/// register.
Poly feedback_poly(const BandSpec& spec);

/// The (L+R) x (L+R) shift matrix T: first column -c_{R-1}/c_R ... -c_{-L}/c_R,
/// shifted identity to its right. One left-multiplication by T performs one
/// batch elimination step of the band; T^{P(f)} = I.
DenseMatrix shift_matrix(const BandSpec& spec);

}  // namespace btfp
