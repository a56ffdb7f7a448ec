#include "btfp/band.hpp"

namespace btfp {

BandSpec::BandSpec(PrimeField field, unsigned lower, std::vector<std::uint32_t> coeffs)
    : field_(field), lower_(lower), upper_(0), coeffs_(std::move(coeffs)) {
    if (lower_ < 1)
        raise(ErrorCode::BadBand, "lower half-bandwidth L must be >= 1");
    if (coeffs_.size() < lower_ + 2)
        raise(ErrorCode::BadBand, "band needs at least L+2 coefficients (c_{-L}..c_R with R >= 1), got " +
                                      std::to_string(coeffs_.size()));
    upper_ = static_cast<unsigned>(coeffs_.size()) - 1 - lower_;
    for (std::uint32_t c : coeffs_) {
        if (c >= field_.modulus())
            raise(ErrorCode::BadBand, "band coefficient " + std::to_string(c) +
                                          " is not a residue in [0, " + std::to_string(field_.modulus()) + ")");
    }
    if (coeffs_.front() == 0) raise(ErrorCode::BadBand, "c_{-L} must be nonzero");
    if (coeffs_.back() == 0) raise(ErrorCode::BadBand, "c_R must be nonzero");
}

DenseMatrix materialize(const BandSpec& spec, std::uint64_t n) {
    if (n < 1 || n > kDenseOrderCap)
        raise(ErrorCode::DenseTooLarge, "order " + std::to_string(n) + " outside dense range [1, " +
                                            std::to_string(kDenseOrderCap) + "]");
    const std::size_t sz = static_cast<std::size_t>(n);
    DenseMatrix m(spec.field(), sz, sz);
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j)
            m.at(i, j) = spec.coeff(static_cast<long long>(j) - static_cast<long long>(i));
    return m;
}

Poly feedback_poly(const BandSpec& spec) {
    return Poly(spec.field(), spec.coeffs());
}

DenseMatrix shift_matrix(const BandSpec& spec) {
    const PrimeField& f = spec.field();
    const std::size_t m = spec.lower() + spec.upper();
    const std::uint32_t lead_inv = f.inv(spec.coeff(spec.upper()));
    DenseMatrix t(f, m, m);
    for (std::size_t r = 0; r < m; ++r) {
        t.at(r, 0) = f.neg(f.mul(spec.coeff(static_cast<long long>(spec.upper()) - 1 - static_cast<long long>(r)),
                                 lead_inv));
        if (r + 1 < m) t.at(r, r + 1) = 1;
    }
    return t;
}

}  // namespace btfp
