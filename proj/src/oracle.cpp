#include "btfp/oracle.hpp"

namespace btfp::oracle {

std::uint32_t det(const DenseMatrix& input) {
    if (input.rows() != input.cols())
        raise(ErrorCode::NotSquare, "oracle determinant requires a square matrix");
    const PrimeField& f = input.field();
    const std::size_t n = input.rows();
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = input.at(i, j);

    std::uint32_t result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = f.neg(result);
        }
        result = f.mul(result, m[col][col]);
        const std::uint32_t inv = f.inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const std::uint32_t factor = f.mul(m[r][col], inv);
            for (std::size_t j = col; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[col][j]));
        }
    }
    return result;
}

DenseMatrix inverse(const DenseMatrix& input) {
    if (input.rows() != input.cols())
        raise(ErrorCode::NotSquare, "oracle inverse requires a square matrix");
    const PrimeField& f = input.field();
    const std::size_t n = input.rows();
    // augmented [M | I], full Gauss-Jordan
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = input.at(i, j);
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) raise(ErrorCode::Singular, "oracle inverse: matrix is singular");
        if (pivot != col) std::swap(m[pivot], m[col]);
        const std::uint32_t inv = f.inv(m[col][col]);
        for (std::size_t j = 0; j < 2 * n; ++j) m[col][j] = f.mul(m[col][j], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const std::uint32_t factor = m[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[col][j]));
        }
    }
    DenseMatrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = m[i][n + j];
    return out;
}

std::uint64_t poly_period(const Poly& f, std::uint64_t bound) {
    if (f.degree() < 1)
        raise(ErrorCode::ZeroOrConstant, "oracle period requires degree >= 1");
    if (f.constant_term() == 0)
        raise(ErrorCode::RootAtZero, "oracle period requires f(0) != 0");
    const PrimeField& field = f.field();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    // monic copy; x^q tracked as a raw coefficient vector of length d
    std::vector<std::uint32_t> mod(d + 1);
    const std::uint32_t lead_inv = field.inv(f.leading());
    for (std::size_t i = 0; i <= d; ++i) mod[i] = field.mul(f.coeff(i), lead_inv);

    std::vector<std::uint32_t> g(d, 0);
    if (d == 1)
        g[0] = field.neg(mod[0]);
    else
        g[1] = 1;
    for (std::uint64_t q = 1; q <= bound; ++q) {
        bool is_one = g[0] == 1;
        for (std::size_t i = 1; i < d && is_one; ++i) is_one = g[i] == 0;
        if (is_one) return q;
        // g *= x (mod f)
        const std::uint32_t high = g[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) g[i] = g[i - 1];
        g[0] = 0;
        if (high != 0)
            for (std::size_t i = 0; i < d; ++i) g[i] = field.sub(g[i], field.mul(high, mod[i]));
    }
    raise(ErrorCode::NotFoundWithinBound,
          "no period within bound " + std::to_string(bound) + " (this indicates a bug)");
}

std::uint64_t shift_period(const BandSpec& spec, std::uint64_t bound) {
    const PrimeField& f = spec.field();
    const std::size_t m = spec.lower() + spec.upper();
    const std::uint32_t lead_inv = f.inv(spec.coeff(spec.upper()));
    std::vector<std::vector<std::uint32_t>> t(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t r = 0; r < m; ++r) {
        t[r][0] = f.neg(f.mul(spec.coeff(static_cast<long long>(spec.upper()) - 1 - static_cast<long long>(r)),
                              lead_inv));
        if (r + 1 < m) t[r][r + 1] = 1;
    }
    std::vector<std::vector<std::uint32_t>> power = t;
    for (std::uint64_t q = 1; q <= bound; ++q) {
        bool ident = true;
        for (std::size_t i = 0; i < m && ident; ++i)
            for (std::size_t j = 0; j < m && ident; ++j) ident = power[i][j] == (i == j ? 1u : 0u);
        if (ident) return q;
        std::vector<std::vector<std::uint32_t>> next(m, std::vector<std::uint32_t>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                if (power[i][k] == 0) continue;
                for (std::size_t j = 0; j < m; ++j)
                    next[i][j] = f.add(next[i][j], f.mul(power[i][k], t[k][j]));
            }
        power = std::move(next);
    }
    raise(ErrorCode::NotFoundWithinBound,
          "shift matrix has no period within bound " + std::to_string(bound) + " (this indicates a bug)");
}

}  // namespace btfp::oracle
