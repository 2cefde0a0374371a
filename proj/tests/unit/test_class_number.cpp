#include "doctest.h"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "csm/class_number.hpp"
#include "csm/error.hpp"
#include "csm/splitting.hpp"

using namespace csm;

namespace {

// Exhaustive search for a x^2 + b x y + c y^2 = p over a generous box.
bool represents(long a, long b, long c, long p) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(p))) + 2;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
            if (a * x * x + b * x * y + c * y * y == p) return true;
    return false;
}

bool is_qr_23(std::uint64_t p) {
    for (std::uint64_t x = 1; x < 23; ++x)
        if ((x * x) % 23 == p % 23) return true;
    return false;
}

// Coefficients of t^0..len-1 of q(t)^g for a power series q.
std::vector<Integer> series_pow(const std::vector<Integer>& q, unsigned g, std::size_t len) {
    std::vector<Integer> out(len, 0);
    out[0] = 1;
    for (unsigned i = 0; i < g; ++i) {
        std::vector<Integer> next(len, 0);
        for (std::size_t a = 0; a < len; ++a)
            for (std::size_t b = 0; a + b < len && b < q.size(); ++b) next[a + b] += out[a] * q[b];
        out = next;
    }
    return out;
}

// f via the average over the three class-group characters, with the
// per-pair factor (1+t)/(1-t) for the trivial character and
// (1-t^2)/(1+t+t^2) for a non-trivial one on non-principal pairs.
Integer f_by_characters(std::uint64_t m) {
    if (m % 23 == 0) return 0;
    constexpr std::size_t kLen = 40;
    std::vector<Integer> trivial(kLen, 2);
    trivial[0] = 1;
    std::vector<Integer> twisted(kLen);
    twisted[0] = 1;
    for (std::size_t j = 1; j < kLen; ++j) twisted[j] = j % 3 == 0 ? 2 : -1;
    Integer f0 = 1;
    Integer fx = 1;
    for (const auto& pp : factorize(m)) {
        if (!is_qr_23(pp.p)) return 0;
        unsigned d = pp.p % 23 == 1 ? 1 : 11;
        unsigned g = d == 1 ? 11 : 1;
        if (pp.e % d != 0) return 0;
        unsigned j = pp.e / d;
        bool principal = represents(1, 1, 6, static_cast<long>(pp.p));
        f0 *= series_pow(trivial, g, j + 1)[j];
        fx *= series_pow(principal ? trivial : twisted, g, j + 1)[j];
    }
    Integer total = f0 + 2 * fx;
    CHECK(total % 3 == 0);
    return total / 3;
}

// Counts signed exponent vectors directly: for each prime p^e of m choose
// exponents on its pairs with sum |n_k| * d = e, then filter on the class.
Integer f_brute(std::uint64_t m) {
    struct Slot {
        unsigned pairs;
        unsigned total;  // sum of |n_k| over the pairs of this prime
        bool principal;
    };
    std::vector<Slot> slots;
    for (const auto& pp : factorize(m)) {
        if (pp.p == 23 || !is_qr_23(pp.p)) return 0;
        unsigned d = pp.p % 23 == 1 ? 1 : 11;
        if (pp.e % d != 0) return 0;
        slots.push_back({d == 1 ? 11u : 1u, pp.e / d, represents(1, 1, 6, static_cast<long>(pp.p))});
    }
    Integer count = 0;
    std::vector<long> ex;
    std::function<void(std::size_t, std::size_t, long, long)> rec =
        [&](std::size_t slot, std::size_t k, long left, long sum) {
            if (slot == slots.size()) {
                if (sum % 3 == 0) count += 1;
                return;
            }
            const Slot& s = slots[slot];
            if (k == s.pairs) {
                if (left == 0) rec(slot + 1, 0, slot + 1 < slots.size() ? slots[slot + 1].total : 0, sum);
                return;
            }
            for (long v = -left; v <= left; ++v) {
                long add = s.principal ? 0 : v;
                rec(slot, k + 1, left - std::labs(v), sum + add);
            }
        };
    if (slots.empty()) return 1;
    rec(0, 0, slots[0].total, 0);
    return count;
}

}  // namespace

TEST_SUITE("class_number") {

TEST_CASE("listed memberships") {
    for (std::uint64_t p : {599ULL, 691ULL, 829ULL}) {
        auto c = classify_p23(p);
        CHECK(c.kind == Kind23::P1);
        CHECK(c.d == 1);
        CHECK(c.pairs == 11);
    }
    for (std::uint64_t p : {59ULL, 101ULL}) {
        auto c = classify_p23(p);
        CHECK(c.kind == Kind23::P1);
        CHECK(c.d == 11);
        CHECK(c.pairs == 1);
    }
    for (std::uint64_t p : {47ULL, 139ULL, 277ULL, 461ULL, 967ULL}) {
        auto c = classify_p23(p);
        CHECK(c.kind == Kind23::P2);
        CHECK(c.d == 1);
    }
    for (std::uint64_t p : {2ULL, 3ULL, 13ULL, 29ULL, 31ULL, 41ULL, 71ULL, 73ULL}) {
        auto c = classify_p23(p);
        CHECK(c.kind == Kind23::P2);
        CHECK(c.d == 11);
    }
    CHECK(classify_p23(5).kind == Kind23::non_splitting);
    CHECK(classify_p23(5).pairs == 0);
    try {
        classify_p23(23);
        FAIL("expected ramified");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ramified);
    }
}

TEST_CASE("classification against the reduced forms of discriminant -23") {
    // A split prime is represented by exactly one of x^2+xy+6y^2 and 2x^2+xy+3y^2.
    for (auto p : primes_up_to(5000)) {
        if (p == 23) continue;
        auto c = classify_p23(p);
        bool split = is_qr_23(p);
        CHECK((c.kind != Kind23::non_splitting) == split);
        CHECK(represented_by_principal_form(p) == represents(1, 1, 6, static_cast<long>(p)));
        if (!split) continue;
        bool principal = represents(1, 1, 6, static_cast<long>(p));
        bool other = represents(2, 1, 3, static_cast<long>(p));
        CHECK(principal != other);
        CHECK((c.kind == Kind23::P1) == principal);
        CHECK(c.d == (p % 23 == 1 ? 1u : 11u));
    }
}

TEST_CASE("agreement with the generic splitting classifier") {
    auto s = normalize_symmetry(23);
    int seen = 0;
    for (auto p : primes_up_to(2000)) {
        if (p == 23) continue;
        if (++seen > 200) break;
        auto g = classify_prime(s, p);
        auto c = classify_p23(p);
        CHECK(g.splitting == is_qr_23(p));
        CHECK(g.splitting == (c.kind == Kind23::P1 || c.kind == Kind23::P2));
        if (g.splitting) {
            CHECK(g.degK == c.d);
            CHECK(g.pairs == c.pairs);
        }
    }
}

TEST_CASE("index factorization") {
    auto fa = factor_index_23(96256);
    REQUIRE(fa.has_value());
    CHECK(fa->p1_part.empty());
    REQUIRE(fa->p2_part.size() == 2);
    std::uint64_t prod = 1;
    for (const auto& x : fa->p2_part) prod *= static_cast<std::uint64_t>(std::pow(x.p, x.e));
    CHECK(prod == 96256);
    CHECK_FALSE(factor_index_23(5).has_value());
    CHECK_FALSE(factor_index_23(4).has_value());
    CHECK_FALSE(factor_index_23(23).has_value());
    CHECK(factor_index_23(1).has_value());
}

TEST_CASE("is_index_23 witnesses") {
    for (std::uint64_t m : {1ULL, 599ULL, 691ULL, 829ULL, 1151ULL, 96256ULL, 362797056ULL, 2209ULL})
        CHECK_MESSAGE(is_index_23(m), m);
    for (std::uint64_t m : {47ULL, 2048ULL, 2ULL, 5ULL, 23ULL, 599ULL * 47ULL, 139ULL})
        CHECK_MESSAGE(!is_index_23(m), m);
    // 2^33 has epsilon 0, leaving the single 47
    CHECK_FALSE(is_index_23(47ULL << 33));
    CHECK(is_index_23(47ULL * 139ULL));
    CHECK_FALSE(is_index_23(8ULL * 47ULL * 47ULL));
}

TEST_CASE("f_23 examples") {
    CHECK(f_23(1) == 1);
    CHECK(f_23(599) == 22);
    CHECK(f_23(2209) == 110);
    CHECK(f_23(47) == 0);
    CHECK(f_23(2048) == 0);
    CHECK(f_23(96256) == 22);
    CHECK(fhat_23(599) == 46 * 22);
    CHECK(count_by_class_23(1, 0) == 1);
    CHECK(count_by_class_23(1, 1) == 0);
}

TEST_CASE("f_23 vanishes exactly off the index set") {
    for (std::uint64_t m = 1; m <= 10000; ++m) CHECK_MESSAGE((f_23(m) > 0) == is_index_23(m), m);
    for (std::uint64_t m : {47ULL, 2048ULL, 96256ULL, 362797056ULL})
        CHECK((f_23(m) > 0) == is_index_23(m));
}

TEST_CASE("f_23 against the character average") {
    for (std::uint64_t m = 1; m <= 20000; ++m) CHECK_MESSAGE(f_23(m) == f_by_characters(m), m);
    for (std::uint64_t m : {96256ULL, 362797056ULL, 2048ULL * 2048ULL * 2048ULL, 47ULL * 47ULL * 47ULL * 599ULL,
                            599ULL * 691ULL * 829ULL, 47ULL * 139ULL * 277ULL})
        CHECK_MESSAGE(f_23(m) == f_by_characters(m), m);
}

TEST_CASE("f_23 against direct enumeration") {
    for (std::uint64_t m : {47ULL, 2209ULL, 103823ULL, 599ULL, 358801ULL, 2048ULL, 96256ULL, 47ULL * 139ULL,
                            47ULL * 139ULL * 277ULL, 599ULL * 47ULL})
        CHECK_MESSAGE(f_23(m) == f_brute(m), m);
    CHECK(f_23(47 * 47) == 2 * 55);
}

TEST_CASE("principal primes reduce to the class-number-one product") {
    for (std::uint64_t m : {599ULL, 691ULL, 829ULL, 599ULL * 691ULL, 599ULL * 599ULL, 599ULL * 691ULL * 829ULL}) {
        Integer prod = 1;
        for (const auto& pp : factorize(m)) prod *= euler_coeff(11, pp.e);
        CHECK(f_23(m) == prod);
        CHECK(count_by_class_23(m, 1) == 0);
    }
}

TEST_CASE("parity and class-count balance") {
    for (std::uint64_t m = 2; m <= 20000; ++m) {
        CHECK(f_23(m) % 2 == 0);
        CHECK(count_by_class_23(m, 1) == count_by_class_23(m, 2));
    }
}

TEST_CASE("series_23") {
    auto t5 = series_23(5);
    REQUIRE(t5.entries.size() == 5);
    std::vector<std::pair<int, int>> want = {{1, 1}, {599, 22}, {691, 22}, {829, 22}, {1151, 22}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(t5.entries[i].first == want[i].first);
        CHECK(t5.entries[i].second == want[i].second);
    }
    auto t6 = series_23(6);
    CHECK(t6.entries.back().first == 2209);
    CHECK(t6.entries.back().second == 110);
    auto t12 = series_23(12);
    REQUIRE(t12.entries.size() == 12);
    CHECK(t12.entries.back().first == 4463);
    CHECK(t12.entries.back().second == 22);
}

TEST_CASE("reflection_index_23") {
    CHECK(reflection_index_23(47 * 47, 47, true) == 47);
    CHECK(reflection_index_23(1, 47, false) == 47);
    CHECK(reflection_index_23(599 * 47 * 47, 47, true) == 28153);
    try {
        reflection_index_23(599, 47, true);
        FAIL("expected divisibility-violation");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::divisibility_violation);
    }
}

TEST_CASE("non-principal reflection indices") {
    auto mn = min_reflection_index_nonprincipal();
    CHECK(mn.index == 47);
    CHECK(mn.count == 11);
    auto r = reflection_indices_nonprincipal(3);
    REQUIRE(r.size() == 3);
    CHECK(r[0].index == 47);
    CHECK(r[1].index == 139);
    CHECK(r[2].index == 277);
    for (const auto& x : r) CHECK(x.count == 11);
    // each listed index is a norm whose class count in the C^2 coset is positive
    for (const auto& x : r) CHECK(count_by_class_23(to_u64(x.index).value(), 1) == x.count);
}

}
