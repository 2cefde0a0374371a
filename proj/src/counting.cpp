#include "csm/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "csm/error.hpp"

namespace csm {

namespace {

void require_cn1(const SymmetryOrder& n) {
    if (n.cn1) return;
    if (n.n == 23) {
        throw Error(Errc::delegated_to_class_number,
                    "n=23 has class number 3; use the n23 counting functions");
    }
    throw Error(Errc::unsupported_class_number,
                "n=" + std::to_string(n.n) + " is not a class-number-one order");
}

// Product over p^e || m of the local count, 0 as soon as one factor fails.
Integer local_product(const SymmetryOrder& n, std::uint64_t m, std::uint64_t limit) {
    require_cn1(n);
    if (m == 0) throw Error(Errc::invalid_argument, "index must be positive");
    Integer out = 1;
    for (const auto& pp : factorize(m, limit)) {
        auto c = classify_prime(n, pp.p);
        if (!c.splitting || pp.e % c.degK != 0) return 0;
        out *= euler_coeff(c.pairs, pp.e / c.degK);
    }
    return out;
}

struct Generator {
    Integer index;
    unsigned pairs;
};

void extend(const std::vector<Generator>& gens, std::size_t from, const Integer& m,
            const Integer& coeff, const Integer& bound,
            std::vector<std::pair<Integer, Integer>>& out) {
    out.emplace_back(m, coeff);
    for (std::size_t i = from; i < gens.size(); ++i) {
        Integer next = m * gens[i].index;
        if (next > bound) break;  // gens ascending, so later ones overshoot too
        unsigned k = 1;
        while (next <= bound) {
            extend(gens, i + 1, next, coeff * euler_coeff(gens[i].pairs, k), bound, out);
            next *= gens[i].index;
            ++k;
        }
    }
}

}  // namespace

Integer euler_coeff(unsigned r, unsigned j) {
    // Multiply by (1+t)/(1-t) = 1 + 2t + 2t^2 + ... r times, truncated at t^j.
    std::vector<Integer> poly(j + 1, 0);
    poly[0] = 1;
    for (unsigned step = 0; step < r; ++step) {
        std::vector<Integer> next(j + 1, 0);
        Integer running = 0;
        for (unsigned k = 0; k <= j; ++k) {
            // next[k] = poly[k] + 2 * (poly[0] + ... + poly[k-1])
            next[k] = poly[k] + 2 * running;
            running += poly[k];
        }
        poly = std::move(next);
    }
    return poly[j];
}

bool is_coincidence_index(const SymmetryOrder& n, std::uint64_t m, std::uint64_t factor_limit) {
    return local_product(n, m, factor_limit) != 0;
}

Integer f(const SymmetryOrder& n, std::uint64_t m, std::uint64_t factor_limit) {
    return local_product(n, m, factor_limit);
}

Integer fhat(const SymmetryOrder& n, std::uint64_t m, std::uint64_t factor_limit) {
    return n.N * f(n, m, factor_limit);
}

DirichletTable dirichlet_terms_upto(const SymmetryOrder& n, std::uint64_t bound) {
    require_cn1(n);
    std::vector<Generator> gens;
    for (const auto& c : splitting_primes(n, bound)) gens.push_back({c.basic_index, c.pairs});
    DirichletTable t;
    t.bound = from_u64(bound);
    if (bound >= 1) extend(gens, 0, Integer(1), Integer(1), t.bound, t.entries);
    std::sort(t.entries.begin(), t.entries.end());
    return t;
}

DirichletTable dirichlet_terms(const SymmetryOrder& n, std::size_t count) {
    require_cn1(n);
    std::uint64_t bound = 64;
    while (true) {
        auto t = dirichlet_terms_upto(n, bound);
        if (t.entries.size() >= count) {
            t.entries.resize(count);
            if (!t.entries.empty()) t.bound = t.entries.back().first;
            return t;
        }
        bound *= 4;
    }
}

std::uint64_t d_star(std::uint64_t m) {
    return std::uint64_t{1} << factorize(m).size();
}

std::uint64_t r_of(std::uint64_t M) {
    if (M == 0) throw Error(Errc::invalid_argument, "r(0) is not finite");
    // 4 * (d_1(M) - d_3(M)) is multiplicative in the odd part:
    // p = 1 (4) contributes e+1, p = 3 (4) kills odd e, 2 is neutral.
    std::uint64_t out = 4;
    for (const auto& pp : factorize(M)) {
        if (pp.p == 2) continue;
        if (pp.p % 4 == 1) {
            out *= pp.e + 1;
        } else if (pp.e % 2 == 1) {
            return 0;
        }
    }
    return out;
}

std::uint64_t r_star(std::uint64_t m) {
    // Every solution of a^2 + b^2 = m^2 is d times a primitive one for
    // (m/d)^2, so r*(m) = sum over squarefree d | m of mu(d) r((m/d)^2).
    auto fac = factorize(m);
    const std::size_t k = fac.size();
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::uint64_t d = 1;
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1U) {
                d *= fac[i].p;
                sign = -sign;
            }
        }
        std::uint64_t q = m / d;
        total += sign * static_cast<std::int64_t>(r_of(q * q));
    }
    return static_cast<std::uint64_t>(total);
}

AverageConstant average_csm(const SymmetryOrder& n) {
    using std::numbers::pi;
    const double sqrt2 = std::sqrt(2.0);
    const double sqrt3 = std::sqrt(3.0);
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    switch (n.n) {
        case 3:
            return {3, sqrt3 / (2 * pi), "sqrt(3)/(2*pi)"};
        case 4:
            return {4, 1 / pi, "1/pi"};
        case 5:
            return {5, 5 * std::log(tau) / (pi * pi), "5*log(tau)/pi^2"};
        case 7: {
            const double l1 = std::log(2 * std::cos(pi / 7));
            const double l2 = std::log(2 * std::cos(2 * pi / 7));
            const double l3 = std::log(2 * std::cos(3 * pi / 7));
            const double R = 4 * (l2 * l2 - l1 * l3);
            return {7, 21 * std::sqrt(7.0) * R / (16 * pi * pi * pi),
                    "21*sqrt(7)*R/(16*pi^3), R/4 = log^2(2cos(2pi/7)) - log(2cos(pi/7))*log(2cos(3pi/7))"};
        }
        case 8:
            return {8, 2 * sqrt2 * std::log(1 + sqrt2) / (pi * pi), "2*sqrt(2)*log(1+sqrt(2))/pi^2"};
        case 12:
            return {12, sqrt3 * std::log(2 + sqrt3) / (pi * pi), "sqrt(3)*log(2+sqrt(3))/pi^2"};
        default:
            throw Error(Errc::not_tabulated,
                        "no average constant for n=" + std::to_string(n.n));
    }
}

}  // namespace csm
