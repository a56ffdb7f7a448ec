#pragma once

#include <cstdint>

#include "btfp/error.hpp"

namespace btfp {

/// Deterministic Miller-Rabin (full 64-bit witness set).
bool is_prime_u64(std::uint64_t n);

/// Arithmetic context for F_p with p prime and 2 <= p < 2^31.
///
/// Elements are canonical residues (uint32_t in [0, p)); every operation
/// returns a canonical residue. The bound on p keeps all products inside
/// 64-bit intermediates. Contexts are immutable and freely copyable;
/// containers carry one and reject cross-modulus operations.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;  // a,b < 2^31, no overflow
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }

    /// a^e by square-and-multiply; 0^0 = 1 (empty product).
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

    /// Multiplicative inverse via Fermat (a^{p-2}). Throws ZeroInverse for a = 0.
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField&) const = default;

  private:
    std::uint32_t p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (a != b)
        raise(ErrorCode::ModulusMismatch,
              "operands live in different prime fields (p=" + std::to_string(a.modulus()) +
                  " vs p=" + std::to_string(b.modulus()) + ")");
}

}  // namespace btfp
