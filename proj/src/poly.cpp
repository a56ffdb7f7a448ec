#include "btfp/poly.hpp"

#include <algorithm>
#include <charconv>

namespace btfp {

Poly::Poly(PrimeField field, std::vector<std::uint32_t> ascending_coeffs)
    : field_(field), coeffs_(std::move(ascending_coeffs)) {
    for (std::uint32_t c : coeffs_) {
        if (c >= field_.modulus())
            raise(ErrorCode::BadInput, "coefficient " + std::to_string(c) +
                                           " is not a residue mod " + std::to_string(field_.modulus()));
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(PrimeField field, std::size_t degree, std::uint32_t coeff) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    c[degree] = coeff;
    return Poly(field, std::move(c));
}

Poly Poly::from_text(PrimeField field, std::string_view text) {
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            raise(ErrorCode::BadInput, "cannot parse polynomial coefficient '" + std::string(tok) + "'");
        coeffs.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Poly(field, std::move(coeffs));
}

std::string Poly::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

std::string Poly::pretty() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        std::uint32_t c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

std::uint32_t Poly::eval(std::uint32_t point) const noexcept {
    std::uint32_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, point), coeffs_[i]);
    return acc;
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_field(field_, rhs.field_);
    std::vector<std::uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), rhs.coeff(i));
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    require_same_field(field_, rhs.field_);
    std::vector<std::uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), rhs.coeff(i));
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_field(field_, rhs.field_);
    if (is_zero() || rhs.is_zero()) return zero(field_);
    std::vector<std::uint32_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], rhs.coeffs_[j]));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::scaled(std::uint32_t factor) const {
    std::vector<std::uint32_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], factor);
    return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return zero(field_);
    std::vector<std::uint32_t> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = field_.mul(coeffs_[i], static_cast<std::uint32_t>(i % field_.modulus()));
    return Poly(field_, std::move(out));
}

void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
    require_same_field(a.field(), b.field());
    const PrimeField& f = a.field();
    if (b.is_zero()) raise(ErrorCode::ZeroModulus, "polynomial division by zero");
    if (a.degree() < b.degree()) {
        quotient = Poly::zero(f);
        remainder = a;
        return;
    }
    std::vector<std::uint32_t> rem = a.coeffs();
    std::vector<std::uint32_t> quo(a.degree() - b.degree() + 1, 0);
    const std::uint32_t lead_inv = f.inv(b.leading());
    const std::size_t bs = b.coeffs().size();
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        std::uint32_t factor = f.mul(rem[shift + bs - 1], lead_inv);
        if (factor != 0) {
            quo[shift] = factor;
            for (std::size_t j = 0; j < bs; ++j)
                rem[shift + j] = f.sub(rem[shift + j], f.mul(factor, b.coeffs()[j]));
        }
    }
    quotient = Poly(f, std::move(quo));
    remainder = Poly(f, std::move(rem));
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q = Poly::zero(a.field()), r = Poly::zero(a.field());
    divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q = Poly::zero(a.field()), r = Poly::zero(a.field());
    divmod(a, b, q, r);
    return r;
}

Poly gcd(Poly a, Poly b) {
    require_same_field(a.field(), b.field());
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modpoly) {
    require_same_field(base.field(), modpoly.field());
    if (modpoly.degree() < 1)
        raise(ErrorCode::ZeroModulus, "pow_mod modulus must have degree >= 1");
    Poly result = Poly::one(base.field());
    Poly b = base % modpoly;
    while (e) {
        if (e & 1) result = (result * b) % modpoly;
        e >>= 1;
        if (e) b = (b * b) % modpoly;
    }
    return result;
}

Poly reciprocal(const Poly& f) {
    if (f.constant_term() == 0)
        raise(ErrorCode::RootAtZero, "reciprocal requires a nonzero constant term");
    std::vector<std::uint32_t> out(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(out));
}

std::vector<std::uint32_t> lfsr_sequence(const Poly& f, std::span<const std::uint32_t> seed,
                                         std::size_t count) {
    if (f.degree() < 1)
        raise(ErrorCode::ZeroLeadingCoefficient,
              "feedback polynomial must have degree >= 1 with a nonzero leading coefficient");
    const PrimeField& field = f.field();
    const std::size_t m = static_cast<std::size_t>(f.degree());
    if (seed.size() != m)
        raise(ErrorCode::SeedLengthMismatch, "seed length " + std::to_string(seed.size()) +
                                                 " != register length " + std::to_string(m));
    std::vector<std::uint32_t> out(seed.begin(), seed.end());
    for (std::uint32_t v : out) {
        if (v >= field.modulus()) raise(ErrorCode::BadInput, "seed entry is not a residue");
    }
    const std::uint32_t lead_inv = field.inv(f.leading());
    while (out.size() < count) {
        std::uint32_t acc = 0;
        for (std::size_t t = 0; t < m; ++t)
            acc = field.add(acc, field.mul(out[out.size() - 1 - t], f.coeff(m - 1 - t)));
        out.push_back(field.mul(field.neg(acc), lead_inv));
    }
    out.resize(count);
    return out;
}

}  // namespace btfp
