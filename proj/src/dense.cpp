#include "btfp/dense.hpp"

namespace btfp {

DenseMatrix DenseMatrix::identity(PrimeField field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool DenseMatrix::is_identity() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1u : 0u)) return false;
    return true;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows())
        raise(ErrorCode::DimensionMismatch,
              "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const std::uint64_t p = a.field().modulus();
    DenseMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = static_cast<std::uint32_t>((out.at(i, j) + aik * b.at(k, j)) % p);
        }
    }
    return out;
}

DenseMatrix mat_pow(const DenseMatrix& a, std::uint64_t e) {
    if (a.rows() != a.cols())
        raise(ErrorCode::NotSquare, "matrix power requires a square matrix");
    DenseMatrix result = DenseMatrix::identity(a.field(), a.rows());
    DenseMatrix base = a;
    while (e) {
        if (e & 1) result = mat_mul(result, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return result;
}

std::uint32_t gauss_det(DenseMatrix m) {
    if (m.rows() != m.cols())
        raise(ErrorCode::NotSquare, "determinant requires a square matrix");
    const PrimeField& f = m.field();
    const std::size_t n = m.rows();
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(col, col));
        const std::uint32_t inv = f.inv(m.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint32_t factor = f.mul(m.at(r, col), inv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(col, j)));
        }
    }
    return det;
}

}  // namespace btfp
