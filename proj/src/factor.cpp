#include "btfp/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace btfp {

namespace {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pollard_rho(std::uint64_t n, std::uint64_t c) {
    auto step = [&](std::uint64_t x) { return (mul_mod_u64(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
        x = step(x);
        y = step(step(y));
        d = std::gcd(x > y ? x - y : y - x, n);
    }
    return d;
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = n;
    for (std::uint64_t c = 1; d == n; ++c) d = pollard_rho(n, c);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

/// f(x) with zero derivative over F_p is g(x^p); extract g (coefficients are
/// fixed by Frobenius on F_p, so they carry over unchanged).
Poly pth_root(const Poly& f) {
    const std::uint32_t p = f.field().modulus();
    std::vector<std::uint32_t> out(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i * p);
    return Poly(f.field(), std::move(out));
}

/// (part, multiplicity) pairs with each part monic squarefree, pairwise
/// coprime; product of part^multiplicity reassembles the monic input.
std::vector<std::pair<Poly, unsigned>> squarefree_decompose(Poly f) {
    const std::uint32_t p = f.field().modulus();
    std::vector<std::pair<Poly, unsigned>> parts;
    unsigned pmult = 1;
    while (f.degree() >= 1) {
        Poly deriv = f.derivative();
        if (deriv.is_zero()) {
            f = pth_root(f);
            pmult *= p;
            continue;
        }
        Poly c = gcd(f, deriv);
        Poly w = f / c;
        for (unsigned i = 1; !w.is_one(); ++i) {
            Poly y = gcd(w, c);
            Poly z = w / y;
            if (!z.is_one()) parts.emplace_back(z, i * pmult);
            w = std::move(y);
            c = c / w;
        }
        f = std::move(c);
    }
    return parts;
}

/// x^{p^k} mod f for k = 1..count, built by iterated Frobenius.
Poly frobenius_step(const Poly& h, const Poly& f) {
    return pow_mod(h, f.field().modulus(), f);
}

/// Splits g (monic squarefree, all irreducible factors of degree d) into the
/// irreducible factors. Cantor-Zassenhaus for odd p; deterministic Berlekamp
/// trace splitting over monomials for p = 2.
void equal_degree_split(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const PrimeField& field = g.field();
    const std::uint32_t p = field.modulus();
    Poly splitter = Poly::zero(field);
    if (p == 2) {
        for (std::uint64_t s = 1;; ++s) {
            // trace of x^s: sum of the d conjugates
            Poly a = pow_mod(Poly::x(field), s, g);
            Poly tr = a;
            Poly conj = a;
            for (unsigned k = 1; k < d; ++k) {
                conj = frobenius_step(conj, g);
                tr = tr + conj;
            }
            Poly cand = gcd(tr, g);
            if (cand.degree() >= 1 && cand.degree() < g.degree()) {
                splitter = std::move(cand);
                break;
            }
        }
    } else {
        std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
        while (true) {
            std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(g.degree()), 0);
            for (auto& c : coeffs) c = dist(rng);
            Poly a(field, std::move(coeffs));
            if (a.degree() < 1) continue;
            Poly shared = gcd(a, g);
            if (shared.degree() >= 1 && shared.degree() < g.degree()) {
                splitter = std::move(shared);
                break;
            }
            // norm ladder: t = a^{(p^d-1)/(p-1)}, then b = t^{(p-1)/2} is a
            // square root of 1 modulo every factor
            Poly t = a;
            for (unsigned k = 1; k < d; ++k) t = (frobenius_step(t, g) * a) % g;
            Poly b = pow_mod(t, (p - 1) / 2, g);
            Poly cand = gcd(b - Poly::one(field), g);
            if (cand.degree() >= 1 && cand.degree() < g.degree()) {
                splitter = std::move(cand);
                break;
            }
        }
    }
    equal_degree_split(splitter, d, rng, out);
    equal_degree_split(g / splitter, d, rng, out);
}

/// Distinct-degree stage: (product of irreducible factors, their degree).
std::vector<std::pair<Poly, unsigned>> distinct_degree_split(Poly g) {
    std::vector<std::pair<Poly, unsigned>> out;
    const PrimeField& field = g.field();
    Poly h = Poly::x(field) % g;
    for (unsigned d = 1; g.degree() >= 1 && 2 * d <= static_cast<unsigned>(g.degree()); ++d) {
        h = frobenius_step(h, g);
        Poly part = gcd(h - Poly::x(field), g);
        if (part.degree() >= 1) {
            out.emplace_back(part, d);
            g = g / part;
            h = h % g;
        }
    }
    if (g.degree() >= 1) out.emplace_back(g, static_cast<unsigned>(g.degree()));
    return out;
}

}  // namespace

Factorization factorize(const Poly& f, std::uint64_t seed) {
    if (f.degree() < 1)
        raise(ErrorCode::ZeroOrConstant, "factorization requires degree >= 1");
    std::mt19937_64 rng(seed);
    Factorization result{f.leading(), {}};
    for (auto& [part, mult] : squarefree_decompose(f.monic())) {
        for (auto& [prod, d] : distinct_degree_split(part)) {
            std::vector<Poly> irreducibles;
            equal_degree_split(prod, d, rng, irreducibles);
            for (Poly& q : irreducibles) result.factors.push_back({std::move(q), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(), [](const FactorPower& a, const FactorPower& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    const Poly g = f.monic();
    const unsigned d = static_cast<unsigned>(g.degree());
    if (d == 1) return true;
    const Poly x = Poly::x(g.field());
    // x^{p^k} mod g for k = 1..d
    std::vector<Poly> frob;
    frob.reserve(d);
    Poly h = x % g;
    for (unsigned k = 1; k <= d; ++k) {
        h = frobenius_step(h, g);
        frob.push_back(h);
    }
    if (!(frob[d - 1] == x % g)) return false;
    for (auto& [prime, exp] : factor_u64(d)) {
        (void)exp;
        if (gcd(frob[d / prime - 1] - x, g).degree() != 0) return false;
    }
    return true;
}

namespace {

/// p^d - 1 guarded against 2^63; CapacityExceeded beyond.
std::uint64_t field_order_minus_one(std::uint32_t p, unsigned d) {
    constexpr std::uint64_t kCap = 1ull << 63;
    unsigned __int128 v = 1;
    for (unsigned i = 0; i < d; ++i) {
        v *= p;
        if (v > kCap)
            raise(ErrorCode::CapacityExceeded, "p^" + std::to_string(d) + " - 1 exceeds 2^63");
    }
    return static_cast<std::uint64_t>(v) - 1;
}

}  // namespace

std::uint64_t irreducible_order(const Poly& f) {
    if (f.constant_term() == 0)
        raise(ErrorCode::RootAtZero, "order is undefined for polynomials divisible by x");
    if (!is_irreducible(f))
        raise(ErrorCode::NotIrreducible, "irreducible_order requires an irreducible polynomial");
    const Poly g = f.monic();
    const Poly one = Poly::one(g.field());
    std::uint64_t q = field_order_minus_one(g.field().modulus(), static_cast<unsigned>(g.degree()));
    for (auto& [prime, exp] : factor_u64(q)) {
        for (unsigned i = 0; i < exp; ++i) {
            if (q % prime != 0) break;
            std::uint64_t candidate = q / prime;
            if (pow_mod(Poly::x(g.field()), candidate, g) == one)
                q = candidate;
            else
                break;
        }
    }
    return q;
}

std::uint64_t poly_period(const Poly& f) {
    if (f.degree() < 1) raise(ErrorCode::ZeroOrConstant, "period requires degree >= 1");
    if (f.constant_term() == 0)
        raise(ErrorCode::RootAtZero, "period is undefined when f(0) = 0");
    // Ensures every subsequent quantity (factor orders, their lcm, the p^t
    // multiplier) stays below 2^63 via the period bound P(f) <= p^deg - 1.
    field_order_minus_one(f.field().modulus(), static_cast<unsigned>(f.degree()));

    Factorization fac = factorize(f);
    std::uint64_t lcm = 1;
    unsigned max_mult = 1;
    for (const FactorPower& fp : fac.factors) {
        std::uint64_t ord = irreducible_order(fp.factor);
        lcm = std::lcm(lcm, ord);
        max_mult = std::max(max_mult, fp.multiplicity);
    }
    std::uint64_t cover = 1;
    while (cover < max_mult) cover *= f.field().modulus();
    return lcm * cover;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        std::vector<std::uint64_t> rest;
        factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.emplace_back(rest[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    return out;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (auto& [prime, exp] : factor_u64(n)) {
        std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace btfp
