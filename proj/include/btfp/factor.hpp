#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "btfp/poly.hpp"

namespace btfp {

struct FactorPower {
    Poly factor;            // monic irreducible
    unsigned multiplicity;  // >= 1
};

/// Complete factorization unit * prod factor_i^multiplicity_i of the input.
/// Factors are monic, irreducible, pairwise distinct, and sorted by
/// (degree, coefficients) so results are reproducible.
struct Factorization {
    std::uint32_t unit;
    std::vector<FactorPower> factors;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eedc0ffee;

/// Squarefree decomposition, then distinct-degree, then equal-degree
/// splitting. Equal-degree splitting is randomized for odd p (seeded, so a
/// fixed seed gives a fixed run) and uses deterministic trace splitting for
/// p = 2. Requires deg(f) >= 1.
Factorization factorize(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

/// Rabin irreducibility test.
bool is_irreducible(const Poly& f);

/// Least q with x^q = 1 (mod f) for f monic irreducible with f(0) != 0.
/// Factors p^d - 1 and strips primes while divisibility still holds.
/// Requires p^d - 1 < 2^63.
std::uint64_t irreducible_order(const Poly& f);

/// Period P(f) = min{q : f | x^q - 1} for any f with f(0) != 0, deg f >= 1:
/// lcm of the irreducible factor orders times the least p^t covering the
/// largest multiplicity.
std::uint64_t poly_period(const Poly& f);

/// Prime factorization of n (ascending primes with exponents); trial division
/// up to 10^6 then Pollard rho.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

}  // namespace btfp
