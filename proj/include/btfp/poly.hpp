#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "btfp/prime_field.hpp"

namespace btfp {

/// Univariate polynomial over F_p, coefficients ascending by power.
///
/// Always normalized: the leading coefficient is nonzero, and the zero
/// polynomial has an empty coefficient vector (degree() == -1). Values are
/// immutable once built; arithmetic returns fresh polynomials.
class Poly {
  public:
    Poly(PrimeField field, std::vector<std::uint32_t> ascending_coeffs);

    static Poly zero(PrimeField field) { return Poly(field, {}); }
    static Poly one(PrimeField field) { return Poly(field, {1}); }
    static Poly x(PrimeField field) { return Poly(field, {0, 1}); }
    static Poly monomial(PrimeField field, std::size_t degree, std::uint32_t coeff = 1);

    /// Parses the ascending comma list, e.g. "1,1,0,1,1" = 1 + x + x^3 + x^4.
    static Poly from_text(PrimeField field, std::string_view text);
    std::string to_text() const;
    /// Human form, e.g. "x^4 + x^3 + x + 1"; "0" for the zero polynomial.
    std::string pretty() const;

    const PrimeField& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint32_t constant_term() const noexcept { return coeff(0); }
    std::uint32_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

    std::uint32_t eval(std::uint32_t point) const noexcept;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly scaled(std::uint32_t factor) const;
    Poly monic() const;
    Poly derivative() const;

    bool operator==(const Poly& rhs) const = default;

  private:
    PrimeField field_;
    std::vector<std::uint32_t> coeffs_;
};

/// Long division: a = q*b + r with deg r < deg b. Throws ZeroModulus when b = 0.
void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic greatest common divisor.
Poly gcd(Poly a, Poly b);

/// base^e mod modpoly (square-and-multiply). Requires deg(modpoly) >= 1.
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modpoly);

/// Coefficient reversal g(x) = x^deg(f) * f(1/x). Requires f(0) != 0 so the
/// degree is preserved; P(g) = P(f).
Poly reciprocal(const Poly& f);

/// Runs the shift register driven by f: the seed (length deg f) followed by
/// terms of x_i = -(x_{i-1} c_{m-1} + ... + x_{i-m} c_0) / c_m where m = deg f
/// and c_t = coefficient of x^t. Returns `count` values in total.
std::vector<std::uint32_t> lfsr_sequence(const Poly& f, std::span<const std::uint32_t> seed,
                                         std::size_t count);

}  // namespace btfp
