#include "csm/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "csm/error.hpp"

namespace csm {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : kSmall) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These twelve bases are a proven witness set below 3.3e24.
    for (auto a : kSmall) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
}

std::vector<PrimePower> factorize(std::uint64_t m, std::uint64_t limit) {
    if (m == 0) throw Error(Errc::invalid_argument, "cannot factor 0");
    if (m > limit) {
        throw Error(Errc::too_large, std::to_string(m) + " exceeds the factorization limit " +
                                         std::to_string(limit));
    }
    std::vector<PrimePower> out;
    auto take = [&](std::uint64_t q) {
        unsigned e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (e > 0) out.push_back({q, e});
    };
    take(2);
    take(3);
    for (std::uint64_t q = 5; q <= m / q; q += 6) {
        take(q);
        take(q + 2);
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

unsigned multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    if (std::gcd(a, m) != 1) {
        throw Error(Errc::invalid_argument, "order of a non-unit modulo " + std::to_string(m));
    }
    a %= m;
    std::uint64_t x = a;
    unsigned d = 1;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++d;
    }
    return d;
}

unsigned totient(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        while (m % q == 0) m /= q;
        result -= result / q;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::optional<std::uint64_t> to_u64(const Integer& v) {
    if (v < 0) return std::nullopt;
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

Integer from_u64(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1U) == 0) {
        q >>= 1U;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t x = powmod(a, (q + 1) / 2, p);
    std::uint64_t t = powmod(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        x = mulmod(x, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    return x;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> cornacchia(std::uint64_t d, std::uint64_t p) {
    if (d == 0 || d > p) return std::nullopt;
    if (d == p) return std::pair<std::uint64_t, std::uint64_t>{0, 1};
    if (p == 2) {
        if (d == 1) return std::pair<std::uint64_t, std::uint64_t>{1, 1};
        return std::nullopt;
    }
    auto r0 = sqrt_mod(p - d % p, p);
    if (!r0) return std::nullopt;
    std::uint64_t a = p;
    std::uint64_t b = *r0 > p / 2 ? *r0 : p - *r0;
    const std::uint64_t limit = isqrt(p);
    while (b > limit) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    std::uint64_t rest = p - b * b;
    if (rest % d != 0) return std::nullopt;
    std::uint64_t y = isqrt(rest / d);
    if (y * y * d != rest) return std::nullopt;
    return std::pair<std::uint64_t, std::uint64_t>{b, y};
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    if (n < 2) return n;
    auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (x > 0 && x > n / x) --x;
    while ((x + 1) <= n / (x + 1)) ++x;
    return x;
}

}  // namespace csm
