#include "csm/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "csm/error.hpp"

namespace csm {

namespace {

// Sieving beyond this would need a segmented sieve; no caller gets close.
constexpr std::uint64_t kSieveLimit = 200'000'000ULL;

// Writes n = p^r * n1 with p not dividing n1.
unsigned strip_prime(unsigned n, std::uint64_t p) {
    while (n % p == 0) n /= static_cast<unsigned>(p);
    return n;
}

bool is_odd_prime_power(unsigned n) {
    if (n % 2 == 0 || n < 3) return false;
    auto f = factorize(n);
    return f.size() == 1;
}

unsigned order_pm(std::uint64_t p, unsigned n) {
    // smallest d with p^d = +-1 (mod n)
    std::uint64_t x = p % n;
    for (unsigned d = 1;; ++d) {
        if (x == 1 % n || x == n - 1) return d;
        x = mulmod(x, p, n);
    }
}

}  // namespace

SymmetryOrder normalize_symmetry(unsigned requested) {
    if (requested < 3) {
        throw Error(Errc::invalid_order, "symmetry order must be at least 3, got " +
                                             std::to_string(requested));
    }
    SymmetryOrder s;
    s.n = requested % 4 == 2 ? requested / 2 : requested;
    s.N = s.n % 2 == 1 ? 2 * s.n : s.n;
    s.degree = totient(s.n);
    s.cn1 = std::binary_search(cn1_orders().begin(), cn1_orders().end(), s.n);
    return s;
}

const std::vector<unsigned>& cn1_orders() {
    // Masley-Montgomery: the canonical n with h(Q(zeta_n)) = 1.
    static const std::vector<unsigned> orders = {3,  4,  5,  7,  8,  9,  11, 12, 13, 15,
                                                 16, 17, 19, 20, 21, 24, 25, 27, 28, 32,
                                                 33, 35, 36, 40, 44, 45, 48, 60, 84};
    return orders;
}

bool is_cn1(const SymmetryOrder& n) {
    return std::binary_search(cn1_orders().begin(), cn1_orders().end(), n.n);
}

unsigned deg_k(const SymmetryOrder& n, std::uint64_t p) {
    unsigned n1 = strip_prime(n.n, p);
    if (n1 <= 2) return 1;
    return multiplicative_order(p % n1, n1);
}

unsigned deg_l(const SymmetryOrder& n, std::uint64_t p) {
    if (n.n % p == 0) {
        throw Error(Errc::ramified_unsupported,
                    std::to_string(p) + " divides n=" + std::to_string(n.n));
    }
    return order_pm(p, n.n);
}

PrimeSplitting classify_prime(const SymmetryOrder& n, std::uint64_t p) {
    require_prime(p);
    PrimeSplitting s;
    s.p = p;
    s.residue = static_cast<unsigned>(p % n.n);
    s.ramified = n.n % p == 0;
    unsigned n1 = s.ramified ? strip_prime(n.n, p) : n.n;
    if (n1 <= 2) {
        s.degK = 1;
        s.degL = 1;
        s.basic_index = 0;
        return s;
    }
    s.degK = multiplicative_order(p % n1, n1);
    s.degL = order_pm(p, n1);
    s.splitting = s.degK == s.degL;
    if (s.splitting) {
        s.pairs = totient(n1) / (2 * s.degK);
        s.basic_index = pow(from_u64(p), s.degK);
    } else {
        s.basic_index = 0;
    }
    return s;
}

std::map<unsigned, ResidueEntry> residue_table(const SymmetryOrder& n) {
    std::map<unsigned, ResidueEntry> table;
    const bool show_l = !is_odd_prime_power(n.n);
    for (unsigned r = 1; r < n.n; ++r) {
        if (std::gcd(r, n.n) != 1) continue;
        ResidueEntry e;
        e.degK = multiplicative_order(r, n.n);
        unsigned dl = order_pm(r, n.n);
        if (show_l) e.degL = dl;
        e.splitting = e.degK == dl;
        table[r] = e;
    }
    for (const auto& pp : factorize(n.n)) {
        auto c = classify_prime(n, pp.p);
        ResidueEntry e;
        e.degK = c.degK;
        if (show_l) e.degL = c.degL;
        e.splitting = c.splitting;
        table[static_cast<unsigned>(pp.p)] = e;
    }
    return table;
}

std::vector<PrimeSplitting> splitting_primes(const SymmetryOrder& n, std::uint64_t bound) {
    if (bound > kSieveLimit) {
        throw Error(Errc::too_large, "basic index bound " + std::to_string(bound) +
                                         " is beyond the sieve limit");
    }
    std::vector<PrimeSplitting> out;
    const Integer b = from_u64(bound);
    for (auto p : primes_up_to(bound)) {
        auto c = classify_prime(n, p);
        if (c.splitting && c.basic_index <= b) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const PrimeSplitting& a, const PrimeSplitting& b) {
        return a.basic_index < b.basic_index;
    });
    return out;
}

std::vector<Integer> basic_indices(const SymmetryOrder& n, std::uint64_t bound) {
    std::vector<Integer> out;
    for (const auto& c : splitting_primes(n, bound)) out.push_back(c.basic_index);
    return out;
}

}  // namespace csm
