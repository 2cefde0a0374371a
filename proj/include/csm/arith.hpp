#pragma once

// Elementary integer arithmetic shared by every module.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace csm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime power p^e as it appears in a factorization.
struct PrimePower {
    std::uint64_t p;
    unsigned e;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Default ceiling for numbers we are willing to factor by trial division.
inline constexpr std::uint64_t kDefaultFactorLimit = 1'000'000'000'000ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Throws Errc::not_prime unless p is prime.
void require_prime(std::uint64_t p);

/// Trial division. Throws Errc::too_large above `limit`.
std::vector<PrimePower> factorize(std::uint64_t m, std::uint64_t limit = kDefaultFactorLimit);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Smallest d >= 1 with a^d = 1 (mod m); requires gcd(a, m) = 1 and m >= 1.
unsigned multiplicative_order(std::uint64_t a, std::uint64_t m);

unsigned totient(unsigned n);
std::vector<unsigned> divisors(unsigned n);

Integer pow(const Integer& base, unsigned long exp);

/// Converts when the value fits, otherwise nullopt.
std::optional<std::uint64_t> to_u64(const Integer& v);
Integer from_u64(std::uint64_t v);

/// x with x^2 = a (mod p) for an odd prime p, if a is a square.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Solves x^2 + d*y^2 = p (p prime, d >= 1) with x, y >= 0.
std::optional<std::pair<std::uint64_t, std::uint64_t>> cornacchia(std::uint64_t d, std::uint64_t p);

std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace csm
