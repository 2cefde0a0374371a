#include "csm/class_number.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "csm/error.hpp"
#include "csm/splitting.hpp"

namespace csm {

namespace {

constexpr std::uint64_t kN = 23;

using Residues = std::array<Integer, 3>;

// Signed exponent vectors over r pairs with sum |n_i| = j, bucketed by sum n_i mod 3.
Residues pair_distribution(unsigned r, unsigned j) {
    // dp[t][s]: first few pairs, total |n| = t, signed sum = s (mod 3)
    std::vector<Residues> dp(j + 1, Residues{0, 0, 0});
    dp[0][0] = 1;
    for (unsigned k = 0; k < r; ++k) {
        std::vector<Residues> next(j + 1, Residues{0, 0, 0});
        for (unsigned t = 0; t <= j; ++t) {
            for (unsigned s = 0; s < 3; ++s) {
                if (dp[t][s] == 0) continue;
                next[t][s] += dp[t][s];  // n_k = 0
                for (unsigned a = 1; t + a <= j; ++a) {
                    next[t + a][(s + a) % 3] += dp[t][s];
                    next[t + a][(s + 3 - a % 3) % 3] += dp[t][s];
                }
            }
        }
        dp = std::move(next);
    }
    return dp[j];
}

std::vector<std::uint64_t> index_generators(std::uint64_t bound, std::vector<Integer>& gens) {
    std::vector<std::uint64_t> primes;
    for (const auto& c : splitting_primes(normalize_symmetry(kN), bound)) {
        primes.push_back(c.p);
        gens.push_back(c.basic_index);
    }
    return primes;
}

void products(const std::vector<Integer>& gens, std::size_t from, const Integer& m,
              const Integer& bound, std::vector<Integer>& out) {
    out.push_back(m);
    for (std::size_t i = from; i < gens.size(); ++i) {
        Integer next = m * gens[i];
        if (next > bound) break;
        while (next <= bound) {
            products(gens, i + 1, next, bound, out);
            next *= gens[i];
        }
    }
}

// Ascending products of basic indices up to a growing bound, filtered by
// `keep`, until `count` survivors are found.
template <class Keep>
std::vector<std::pair<Integer, Integer>> first_terms(std::size_t count, Keep keep) {
    for (std::uint64_t bound = 1024;; bound *= 4) {
        std::vector<Integer> gens;
        index_generators(bound, gens);
        std::vector<Integer> ms;
        products(gens, 0, Integer(1), from_u64(bound), ms);
        std::sort(ms.begin(), ms.end());
        std::vector<std::pair<Integer, Integer>> out;
        for (const auto& m : ms) {
            Integer c = keep(*to_u64(m));
            if (c == 0) continue;
            out.emplace_back(m, c);
            if (out.size() == count) return out;
        }
        if (count == 0) return out;
    }
}

}  // namespace

bool represented_by_principal_form(std::uint64_t p) {
    // y^2 + x y + 6x^2 - p = 0 has discriminant 4p - 23x^2, so 23x^2 <= 4p.
    for (std::uint64_t x = 0; 23 * x * x <= 4 * p; ++x) {
        std::uint64_t disc = 4 * p - 23 * x * x;
        std::uint64_t s = isqrt(disc);
        if (s * s == disc && (s + x) % 2 == 0) return true;
    }
    return false;
}

PrimeClass23 classify_p23(std::uint64_t p) {
    require_prime(p);
    if (p == kN) throw Error(Errc::ramified, "23 is ramified in Q(zeta_23)");
    PrimeClass23 c;
    c.p = p;
    c.d = multiplicative_order(p % kN, kN);
    if (powmod(p % kN, 11, kN) != 1) {
        c.kind = Kind23::non_splitting;
        return c;
    }
    c.pairs = 11 / c.d;
    c.kind = represented_by_principal_form(p) ? Kind23::P1 : Kind23::P2;
    return c;
}

std::optional<IndexFactorization23> factor_index_23(std::uint64_t m) {
    if (m == 0) throw Error(Errc::invalid_argument, "index must be positive");
    IndexFactorization23 out;
    for (const auto& pp : factorize(m)) {
        if (pp.p == kN) return std::nullopt;
        auto c = classify_p23(pp.p);
        if (c.kind == Kind23::non_splitting || pp.e % c.d != 0) return std::nullopt;
        auto& part = c.kind == Kind23::P1 ? out.p1_part : out.p2_part;
        part.push_back({pp.p, pp.e, c});
    }
    return out;
}

bool is_index_23(std::uint64_t m) {
    auto fac = factor_index_23(m);
    if (!fac) return false;
    unsigned total = 0;
    for (const auto& f : fac->p2_part) {
        unsigned a = f.e / f.cls.d;
        if (f.cls.d == 1) {
            total += a;
        } else {
            total += a % 3 == 0 ? 0 : 1;
        }
    }
    return total != 1;
}

Integer count_by_class_23(std::uint64_t m, unsigned residue) {
    auto fac = factor_index_23(m);
    if (!fac) return 0;
    Integer principal = 1;
    for (const auto& f : fac->p1_part) principal *= euler_coeff(f.cls.pairs, f.e / f.cls.d);
    Residues acc{1, 0, 0};
    for (const auto& f : fac->p2_part) {
        Residues d = pair_distribution(f.cls.pairs, f.e / f.cls.d);
        Residues next{0, 0, 0};
        for (unsigned a = 0; a < 3; ++a)
            for (unsigned b = 0; b < 3; ++b) next[(a + b) % 3] += acc[a] * d[b];
        acc = next;
    }
    return principal * acc[residue % 3];
}

Integer f_23(std::uint64_t m) { return count_by_class_23(m, 0); }

Integer fhat_23(std::uint64_t m) { return 2 * kN * f_23(m); }

DirichletTable series_23(std::size_t count) {
    DirichletTable t;
    t.entries = first_terms(count, [](std::uint64_t m) { return f_23(m); });
    t.bound = t.entries.empty() ? Integer(0) : t.entries.back().first;
    return t;
}

Integer reflection_index_23(const Integer& num_norm, const Integer& p_norm, bool divides) {
    if (p_norm <= 0 || num_norm <= 0) {
        throw Error(Errc::invalid_argument, "norms must be positive");
    }
    if (!divides) return num_norm * p_norm;
    if (num_norm % p_norm != 0) {
        throw Error(Errc::divisibility_violation,
                    p_norm.get_str() + " does not divide " + num_norm.get_str());
    }
    return num_norm / p_norm;
}

std::vector<ReflectionIndex> reflection_indices_nonprincipal(std::size_t count) {
    std::vector<ReflectionIndex> out;
    for (auto& [m, c] : first_terms(count, [](std::uint64_t m) { return count_by_class_23(m, 1); }))
        out.push_back({m, c});
    return out;
}

ReflectionIndex min_reflection_index_nonprincipal() {
    return reflection_indices_nonprincipal(1).front();
}

}  // namespace csm
