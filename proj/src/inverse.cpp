#include "btfp/inverse.hpp"

#include "btfp/factor.hpp"
#include "btfp/oracle.hpp"

namespace btfp {

namespace {

/// x_{i,j} for j > L given access to the entries left of j in row i.
/// `known(a)` must return x_{i,a} for 1 <= a <= j-1.
std::uint32_t row_step(const BandSpec& spec, auto&& known, std::uint64_t i, std::uint64_t j) {
    const PrimeField& f = spec.field();
    const long long L = spec.lower(), R = spec.upper();
    std::uint32_t acc = (i + L == j) ? 1 : 0;
    for (long long t = -L + 1; t <= R; ++t) {
        const long long a = static_cast<long long>(j) - L - t;
        if (a >= 1) acc = f.sub(acc, f.mul(spec.coeff(t), known(static_cast<std::uint64_t>(a))));
    }
    return f.mul(acc, f.inv(spec.coeff(-L)));
}

/// x_{i,j} for i > R given access to the entries above i in column j.
std::uint32_t col_step(const BandSpec& spec, auto&& known, std::uint64_t i, std::uint64_t j) {
    const PrimeField& f = spec.field();
    const long long L = spec.lower(), R = spec.upper();
    std::uint32_t acc = (i == j + R) ? 1 : 0;
    for (long long t = -L; t <= R - 1; ++t) {
        const long long a = static_cast<long long>(i) + t - R;
        if (a >= 1) acc = f.sub(acc, f.mul(spec.coeff(t), known(static_cast<std::uint64_t>(a))));
    }
    return f.mul(acc, f.inv(spec.coeff(R)));
}

/// A of the cofactor formula: (L+R) x (L+R) upper triangular with c_{-L} on
/// the diagonal, entry (s, b) = c_{b-s-L} (0-based; zero below the diagonal).
DenseMatrix cofactor_block_a(const BandSpec& spec) {
    const std::size_t m = spec.lower() + spec.upper();
    DenseMatrix a(spec.field(), m, m);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t b = s; b < m; ++b)
            a.at(s, b) = spec.coeff(static_cast<long long>(b) - static_cast<long long>(s) -
                                    static_cast<long long>(spec.lower()));
    return a;
}

/// B block shared by the determinant and cofactor formulas: entry
/// (s, t) = c_{R+t-s}, L columns.
DenseMatrix cofactor_block_b(const BandSpec& spec) {
    const std::size_t m = spec.lower() + spec.upper();
    DenseMatrix b(spec.field(), m, spec.lower());
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < spec.lower(); ++t)
            b.at(s, t) = spec.coeff(static_cast<long long>(spec.upper()) + static_cast<long long>(t) -
                                    static_cast<long long>(s));
    return b;
}

/// C block: the first L rows x first L+R columns of the band pattern,
/// entry (a, b) = c_{b-a}.
DenseMatrix cofactor_block_c(const BandSpec& spec) {
    const std::size_t m = spec.lower() + spec.upper();
    DenseMatrix c(spec.field(), spec.lower(), m);
    for (std::size_t a = 0; a < spec.lower(); ++a)
        for (std::size_t b = 0; b < m; ++b)
            c.at(a, b) = spec.coeff(static_cast<long long>(b) - static_cast<long long>(a));
    return c;
}

}  // namespace

DenseMatrix corner_elements(const BandSpec& spec, std::uint64_t n) {
    const PrimeField& f = spec.field();
    const std::uint64_t L = spec.lower(), R = spec.upper();
    const DetResult dr = det_fast(spec, n);
    if (dr.value == 0)
        raise(ErrorCode::Singular, "order-" + std::to_string(n) + " matrix is singular");
    if (n < 2 * L + R)
        raise(ErrorCode::OrderTooSmall, "corner formula needs n >= 2L+R = " + std::to_string(2 * L + R) +
                                            ", got n = " + std::to_string(n));

    const std::uint64_t e = n - 2 * L - R;
    const std::size_t m = static_cast<std::size_t>(L + R);
    // column removal commutes with the left multiplication, so T^e A is
    // computed once and columns are dropped per corner entry
    const DenseMatrix shifted_a = mat_mul(mat_pow(shift_matrix(spec), e % dr.period), cofactor_block_a(spec));
    const DenseMatrix b = cofactor_block_b(spec);
    const DenseMatrix c = cofactor_block_c(spec);

    const std::uint32_t det_inv = f.inv(dr.value);
    const std::uint32_t scale = f.pow(spec.coeff(static_cast<long long>(R)), e % (f.modulus() - 1));
    // parity of (L+R+1)e + (L-1)(n-L), from the true integers
    const std::uint64_t base_parity = (((L + R + 1) & (e & 1)) ^ ((L - 1) & (n - L))) & 1;

    DenseMatrix corner(f, static_cast<std::size_t>(R), static_cast<std::size_t>(L));
    const std::size_t dim = m + static_cast<std::size_t>(L) - 1;  // 2L+R-1
    for (std::uint64_t i = 1; i <= R; ++i) {
        for (std::uint64_t j = 1; j <= L; ++j) {
            DenseMatrix block(f, dim, dim);
            // top rows: T^e A with column i-1 removed, then B
            for (std::size_t r = 0; r < m; ++r) {
                std::size_t out_col = 0;
                for (std::size_t col = 0; col < m; ++col)
                    if (col != i - 1) block.at(r, out_col++) = shifted_a.at(r, col);
                for (std::size_t col = 0; col < L; ++col) block.at(r, out_col++) = b.at(r, col);
            }
            // bottom rows: C with row j-1 and column i-1 removed, zeros right
            std::size_t out_row = m;
            for (std::size_t row = 0; row < L; ++row) {
                if (row == j - 1) continue;
                std::size_t out_col = 0;
                for (std::size_t col = 0; col < m; ++col)
                    if (col != i - 1) block.at(out_row, out_col++) = c.at(row, col);
                ++out_row;
            }
            std::uint32_t value = f.mul(f.mul(gauss_det(std::move(block)), scale), det_inv);
            if ((base_parity ^ ((i + j) & 1)) & 1) value = f.neg(value);
            corner.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = value;
        }
    }
    return corner;
}

std::uint32_t row_extend(const BandSpec& spec, std::span<const std::uint32_t> row_prefix,
                         std::uint64_t i, std::uint64_t j) {
    if (j <= spec.lower())
        raise(ErrorCode::IndexOutOfRange, "row recurrence applies only for j > L");
    if (row_prefix.size() + 1 < j)
        raise(ErrorCode::IndexOutOfRange, "row prefix must cover columns 1..j-1");
    return row_step(spec, [&](std::uint64_t a) { return row_prefix[static_cast<std::size_t>(a - 1)]; }, i, j);
}

std::uint32_t col_extend(const BandSpec& spec, std::span<const std::uint32_t> col_prefix,
                         std::uint64_t i, std::uint64_t j) {
    if (i <= spec.upper())
        raise(ErrorCode::IndexOutOfRange, "column recurrence applies only for i > R");
    if (col_prefix.size() + 1 < i)
        raise(ErrorCode::IndexOutOfRange, "column prefix must cover rows 1..i-1");
    return col_step(spec, [&](std::uint64_t a) { return col_prefix[static_cast<std::size_t>(a - 1)]; }, i, j);
}

DenseInverse inverse_dense(const BandSpec& spec, std::uint64_t n) {
    const std::uint64_t L = spec.lower(), R = spec.upper();
    const DetResult dr = det_fast(spec, n);
    if (dr.value == 0)
        raise(ErrorCode::Singular, "order-" + std::to_string(n) + " matrix is singular");
    if (n > kDenseOrderCap)
        raise(ErrorCode::DenseTooLarge, "order " + std::to_string(n) + " exceeds the dense cap");
    if (n < 2 * L + R) return {oracle::inverse(materialize(spec, n)), dr.value};

    const std::size_t sz = static_cast<std::size_t>(n);
    DenseMatrix x(spec.field(), sz, sz);
    const DenseMatrix corner = corner_elements(spec, n);
    for (std::size_t r = 0; r < corner.rows(); ++r)
        for (std::size_t c = 0; c < corner.cols(); ++c) x.at(r, c) = corner.at(r, c);
    for (std::uint64_t i = 1; i <= R; ++i)
        for (std::uint64_t j = L + 1; j <= n; ++j)
            x.at(i - 1, j - 1) = row_step(spec, [&](std::uint64_t a) { return x.at(i - 1, a - 1); }, i, j);
    for (std::uint64_t i = R + 1; i <= n; ++i)
        for (std::uint64_t j = 1; j <= n; ++j)
            x.at(i - 1, j - 1) = col_step(spec, [&](std::uint64_t a) { return x.at(a - 1, j - 1); }, i, j);
    return {std::move(x), dr.value};
}

PeriodicInverse inverse_compact(const BandSpec& spec, std::uint64_t n) {
    const std::uint64_t L = spec.lower(), R = spec.upper();
    const std::uint64_t period = poly_period(feedback_poly(spec));
    const DetResult dr = det_fast(spec, n);
    if (dr.value == 0)
        raise(ErrorCode::Singular, "order-" + std::to_string(n) + " matrix is singular");
    if (period > kCompactPeriodCap)
        raise(ErrorCode::CapacityExceeded, "P(f) = " + std::to_string(period) +
                                               " exceeds the compact block cap " +
                                               std::to_string(kCompactPeriodCap));
    if (n < 2 * period)
        raise(ErrorCode::OrderTooSmall, "compact inverse needs n >= 2 P(f) = " + std::to_string(2 * period) +
                                            "; use the dense path below that");

    const std::size_t P = static_cast<std::size_t>(period);
    // top: rows 1..P x cols 1..2P; bottom: rows P+1..2P x cols 1..P
    DenseMatrix top(spec.field(), P, 2 * P);
    DenseMatrix bottom(spec.field(), P, P);
    const DenseMatrix corner = corner_elements(spec, n);
    for (std::size_t r = 0; r < corner.rows(); ++r)
        for (std::size_t c = 0; c < corner.cols(); ++c) top.at(r, c) = corner.at(r, c);
    for (std::uint64_t i = 1; i <= R; ++i)
        for (std::uint64_t j = L + 1; j <= 2 * period; ++j)
            top.at(i - 1, j - 1) = row_step(spec, [&](std::uint64_t a) { return top.at(i - 1, a - 1); }, i, j);
    for (std::uint64_t i = R + 1; i <= period; ++i)
        for (std::uint64_t j = 1; j <= 2 * period; ++j)
            top.at(i - 1, j - 1) = col_step(spec, [&](std::uint64_t a) { return top.at(a - 1, j - 1); }, i, j);
    for (std::uint64_t i = period + 1; i <= 2 * period; ++i)
        for (std::uint64_t j = 1; j <= period; ++j) {
            auto known = [&](std::uint64_t a) {
                return a <= period ? top.at(a - 1, j - 1) : bottom.at(a - period - 1, j - 1);
            };
            bottom.at(i - period - 1, j - 1) = col_step(spec, known, i, j);
        }

    DenseMatrix diag(spec.field(), P, P), upper(spec.field(), P, P);
    for (std::size_t r = 0; r < P; ++r)
        for (std::size_t c = 0; c < P; ++c) {
            diag.at(r, c) = top.at(r, c);
            upper.at(r, c) = top.at(r, P + c);
        }
    return PeriodicInverse(spec, n, period, dr.value, std::move(diag), std::move(upper), std::move(bottom));
}

PeriodicInverse::PeriodicInverse(BandSpec spec, std::uint64_t n, std::uint64_t period, std::uint32_t det,
                                 DenseMatrix block_diag, DenseMatrix block_upper, DenseMatrix block_lower)
    : spec_(std::move(spec)),
      n_(n),
      period_(period),
      det_(det),
      diag_(std::move(block_diag)),
      upper_(std::move(block_upper)),
      lower_(std::move(block_lower)) {
    if (det_ == 0) raise(ErrorCode::Singular, "periodic inverse requires a nonzero determinant");
    if (n_ < 2 * period_)
        raise(ErrorCode::OrderTooSmall, "periodic inverse requires n >= 2 P(f)");
    for (const DenseMatrix* blk : {&diag_, &upper_, &lower_}) {
        require_same_field(spec_.field(), blk->field());
        if (blk->rows() != period_ || blk->cols() != period_)
            raise(ErrorCode::DimensionMismatch, "periodic inverse blocks must be P x P");
    }
}

std::uint32_t PeriodicInverse::at(std::uint64_t i, std::uint64_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        raise(ErrorCode::IndexOutOfRange, "inverse index (" + std::to_string(i) + ", " + std::to_string(j) +
                                              ") outside 1.." + std::to_string(n_));
    const std::uint64_t bi = (i - 1) / period_, bj = (j - 1) / period_;
    const std::size_t r = static_cast<std::size_t>((i - 1) % period_);
    const std::size_t c = static_cast<std::size_t>((j - 1) % period_);
    if (bi == bj) return diag_.at(r, c);
    return bi < bj ? upper_.at(r, c) : lower_.at(r, c);
}

DenseMatrix PeriodicInverse::materialize() const {
    if (n_ > kDenseOrderCap)
        raise(ErrorCode::DenseTooLarge, "order " + std::to_string(n_) + " exceeds the dense cap");
    const std::size_t sz = static_cast<std::size_t>(n_);
    DenseMatrix m(spec_.field(), sz, sz);
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) m.at(i, j) = at(i + 1, j + 1);
    return m;
}

}  // namespace btfp
