#include "doctest.h"

#include <numeric>

#include "csm/error.hpp"
#include "csm/splitting.hpp"

using namespace csm;

namespace {

struct Row {
    unsigned label;
    unsigned degK;
    int degL;  // -1: not shown
    bool splitting;
};

void check_table(unsigned n, const std::vector<Row>& rows) {
    auto t = residue_table(normalize_symmetry(n));
    REQUIRE(t.size() == rows.size());
    for (const auto& r : rows) {
        INFO("n=" << n << " residue " << r.label);
        REQUIRE(t.count(r.label) == 1);
        const auto& e = t.at(r.label);
        CHECK(e.degK == r.degK);
        CHECK(e.splitting == r.splitting);
        if (r.degL < 0) {
            CHECK_FALSE(e.degL.has_value());
        } else {
            REQUIRE(e.degL.has_value());
            CHECK(*e.degL == static_cast<unsigned>(r.degL));
        }
    }
}

}  // namespace

TEST_SUITE("splitting") {

TEST_CASE("normalize_symmetry") {
    auto a = normalize_symmetry(10);
    CHECK(a.n == 5);
    CHECK(a.N == 10);
    CHECK(a.degree == 4);
    auto b = normalize_symmetry(8);
    CHECK(b.n == 8);
    CHECK(b.N == 8);
    auto c = normalize_symmetry(6);
    CHECK(c.n == 3);
    CHECK(c.N == 6);
    CHECK(c.cn1);
    for (unsigned k = 3; k < 200; ++k) {
        auto s = normalize_symmetry(k);
        CHECK(s.n % 4 != 2);
        CHECK(s.N == std::lcm(s.n, 2u));
        CHECK(s.degree == totient(s.n));
    }
    for (unsigned bad : {0u, 1u, 2u}) {
        try {
            normalize_symmetry(bad);
            FAIL("expected invalid-order");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::invalid_order);
        }
    }
}

TEST_CASE("class-number-one list") {
    const auto& l = cn1_orders();
    CHECK(l.size() == 29);
    CHECK(std::is_sorted(l.begin(), l.end()));
    for (unsigned n : l) CHECK(n % 4 != 2);
    CHECK(is_cn1(normalize_symmetry(12)));
    CHECK(is_cn1(normalize_symmetry(84)));
    CHECK(l.back() == 84);
    CHECK_FALSE(is_cn1(normalize_symmetry(23)));
    CHECK_FALSE(is_cn1(normalize_symmetry(39)));
    // the six worked examples are all in the list
    for (unsigned n : {3u, 4u, 5u, 7u, 8u, 12u}) CHECK(is_cn1(normalize_symmetry(n)));
}

TEST_CASE("deg_k and deg_l examples") {
    CHECK(deg_k(normalize_symmetry(5), 2) == 4);
    CHECK(deg_k(normalize_symmetry(4), 2) == 1);
    CHECK(deg_k(normalize_symmetry(7), 29) == 1);
    CHECK(deg_l(normalize_symmetry(8), 7) == 1);
    CHECK(deg_l(normalize_symmetry(5), 2) == 2);
    CHECK(deg_l(normalize_symmetry(4), 3) == 1);
    try {
        deg_l(normalize_symmetry(12), 3);
        FAIL("expected ramified-unsupported");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ramified_unsupported);
    }
}

TEST_CASE("classify_prime examples") {
    auto a = classify_prime(normalize_symmetry(5), 11);
    CHECK(a.splitting);
    CHECK(a.degK == 1);
    CHECK(a.basic_index == 11);
    CHECK(a.pairs == 2);
    auto b = classify_prime(normalize_symmetry(7), 2);
    CHECK(b.splitting);
    CHECK(b.degK == 3);
    CHECK(b.basic_index == 8);
    auto c = classify_prime(normalize_symmetry(5), 19);
    CHECK_FALSE(c.splitting);
    CHECK(c.degK == 2);
    auto d = classify_prime(normalize_symmetry(12), 2);
    CHECK_FALSE(d.splitting);
    CHECK(d.degK == 2);
    CHECK(d.ramified);
    auto e = classify_prime(normalize_symmetry(12), 3);
    CHECK_FALSE(e.splitting);
    CHECK(e.degK == 2);
    // fully ramified: n a power of p
    auto f = classify_prime(normalize_symmetry(8), 2);
    CHECK(f.ramified);
    CHECK(f.degK == 1);
    CHECK_FALSE(f.splitting);
    CHECK(f.pairs == 0);
    // ramified but splitting through n1 = 3
    auto g = classify_prime(normalize_symmetry(21), 7);
    CHECK(g.ramified);
    CHECK(g.splitting);
    CHECK(g.degK == 1);
    CHECK(g.pairs == 1);
    CHECK_THROWS_AS(classify_prime(normalize_symmetry(5), 21), Error);
}

TEST_CASE("residue tables of the six worked examples") {
    check_table(3, {{1, 1, -1, true}, {2, 2, -1, false}, {3, 1, -1, false}});
    check_table(4, {{1, 1, 1, true}, {2, 1, 1, false}, {3, 2, 1, false}});
    check_table(5, {{1, 1, -1, true}, {2, 4, -1, false}, {3, 4, -1, false}, {4, 2, -1, false},
                    {5, 1, -1, false}});
    check_table(7, {{1, 1, -1, true}, {2, 3, -1, true}, {3, 6, -1, false}, {4, 3, -1, true},
                    {5, 6, -1, false}, {6, 2, -1, false}, {7, 1, -1, false}});
    check_table(8, {{1, 1, 1, true}, {2, 1, 1, false}, {3, 2, 2, true}, {5, 2, 2, true},
                    {7, 2, 1, false}});
    check_table(12, {{1, 1, 1, true}, {2, 2, 1, false}, {3, 2, 1, false}, {5, 2, 2, true},
                     {7, 2, 2, true}, {11, 2, 1, false}});
}

TEST_CASE("residue table agrees with classify_prime on actual primes") {
    for (unsigned n : cn1_orders()) {
        auto s = normalize_symmetry(n);
        auto t = residue_table(s);
        for (auto p : primes_up_to(3000)) {
            auto c = classify_prime(s, p);
            unsigned key = c.ramified ? static_cast<unsigned>(p) : static_cast<unsigned>(p % n);
            REQUIRE(t.count(key) == 1);
            CHECK(t.at(key).degK == c.degK);
            CHECK(t.at(key).splitting == c.splitting);
        }
    }
}

TEST_CASE("basic_indices") {
    auto a = basic_indices(normalize_symmetry(4), 30);
    CHECK(a == std::vector<Integer>{5, 13, 17, 29});
    auto b = basic_indices(normalize_symmetry(7), 30);
    CHECK(b == std::vector<Integer>{8, 29});
    for (unsigned n : {3u, 4u, 5u, 7u, 8u, 12u}) CHECK(basic_indices(normalize_symmetry(n), 1).empty());
    auto c = basic_indices(normalize_symmetry(12), 200);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
}

TEST_CASE("degree properties for p < 10^4, n < 100") {
    auto primes = primes_up_to(10000);
    for (unsigned req = 3; req < 100; ++req) {
        auto s = normalize_symmetry(req);
        if (s.n != req) continue;
        bool odd_prime_power = s.n % 2 == 1 && factorize(s.n).size() == 1;
        for (auto p : primes) {
            if (s.n % p == 0) continue;
            unsigned dk = deg_k(s, p);
            unsigned dl = deg_l(s, p);
            // order by repeated multiplication
            std::uint64_t x = p % s.n;
            unsigned d = 1;
            while (x != 1) {
                x = x * p % s.n;
                ++d;
            }
            CHECK(dk == d);
            CHECK(s.degree % dk == 0);
            CHECK((dl == dk || 2 * dl == dk));
            auto c = classify_prime(s, p);
            if (p % s.n == 1) {
                CHECK(c.splitting);
                CHECK(c.degK == 1);
            }
            if (p % s.n == s.n - 1) {
                CHECK_FALSE(c.splitting);
                CHECK(c.degK == 2);
                CHECK(c.degL == 1);
            }
            if (odd_prime_power) CHECK(c.splitting == (dk % 2 == 1));
            if (c.splitting) {
                CHECK(c.pairs * 2 * c.degK == s.degree);
                CHECK(c.basic_index % s.n == 1);
            }
        }
    }
}

}
