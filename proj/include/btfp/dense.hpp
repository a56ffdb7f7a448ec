#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "btfp/prime_field.hpp"

namespace btfp {

/// Row-major exact matrix over F_p. Indices are 0-based at this level; the
/// 1-based convention of the contracts applies to the public query surfaces
/// that expose matrix positions (PeriodicInverse::at).
class DenseMatrix {
  public:
    DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static DenseMatrix identity(PrimeField field, std::size_t n);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    std::uint32_t& at(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    bool is_identity() const noexcept;

    bool operator==(const DenseMatrix& rhs) const = default;

  private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> entries_;
};

/// Exact product; throws DimensionMismatch / ModulusMismatch.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

/// a^e by square-and-multiply (O(log e) products); a must be square.
DenseMatrix mat_pow(const DenseMatrix& a, std::uint64_t e);

/// Determinant by in-place elimination, first nonzero pivot, row swaps
/// tracked for sign. This is the fast-path routine; the verification oracle
/// keeps its own independent copy.
std::uint32_t gauss_det(DenseMatrix m);

}  // namespace btfp
