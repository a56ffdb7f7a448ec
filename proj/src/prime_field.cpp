#include "btfp/prime_field.hpp"

namespace btfp {

namespace {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod_u64(r, a, m);
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all n < 2^64 (Sinclair).
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31))
        raise(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not below 2^31");
    if (!is_prime_u64(p))
        raise(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_;
    std::uint32_t b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) raise(ErrorCode::ZeroInverse, "zero has no multiplicative inverse");
    return pow(a, p_ - 2);
}

}  // namespace btfp
