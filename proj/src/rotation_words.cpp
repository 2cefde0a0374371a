#include "csm/rotation_words.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

#include "csm/error.hpp"

namespace csm {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

std::string label_str(const PairLabel& l) {
    return "(" + std::to_string(l.p) + "," + std::to_string(l.pair) + ")";
}

void require_splitting(const PrimeSplitting& c, const SymmetryOrder& n) {
    if (!c.splitting) {
        throw Error(Errc::not_splitting, std::to_string(c.p) +
                                             " is not a complex splitting prime for n=" +
                                             std::to_string(n.n));
    }
}

// Coincidence rotations need omega's from a class-number-one field.
void require_cn1(const SymmetryOrder& n) {
    if (!n.cn1) {
        throw Error(Errc::unsupported_class_number,
                    "prime elements are only constructed for class-number-one orders");
    }
}

}  // namespace

RotationWord RotationWord::identity(const SymmetryOrder& n) {
    RotationWord w;
    w.n = n;
    return w;
}

NormalizedPrime normalize_prime(const CycInt& omega) {
    const unsigned n = omega.order();
    const long N = n % 2 == 1 ? 2L * n : n;
    const double step = 2 * std::numbers::pi / static_cast<double>(N);
    const CycInt bar = omega.conjugate();
    for (const CycInt* s : {&omega, &bar}) {
        double x = 2 * std::arg(s->embed());
        double j = std::floor(x / step);
        double rest = x - j * step;
        // rest in (0, step/2) means eta^(-j) s / conj(s) lies in (0, pi/N);
        // the boundaries would make omega / conj(omega) a root of unity.
        if (rest <= 0 || rest >= step / 2) continue;
        long J = mod(-static_cast<long>(j), N);
        NormalizedPrime out;
        out.unit_shift = static_cast<int>(J % 2);
        out.omega = CycInt::unit_pow(n, J / 2) * *s;
        return out;
    }
    throw Error(Errc::internal_mismatch, "omega / conj(omega) looks like a root of unity");
}

NormalizedPrime split_prime_quadratic(unsigned n, std::uint64_t p) {
    if (n != 3 && n != 4) {
        throw Error(Errc::invalid_order, "quadratic splitting needs n = 3 or 4");
    }
    auto order = normalize_symmetry(n);
    require_splitting(classify_prime(order, p), order);
    if (n == 4) {
        auto ab = cornacchia(1, p);
        if (!ab) throw Error(Errc::internal_mismatch, "no two-square form for " + std::to_string(p));
        return normalize_prime(CycInt(4, {from_u64(ab->first), from_u64(ab->second)}));
    }
    // x^2 + 3y^2 = p and sqrt(-3) = 1 + 2 xi
    auto xy = cornacchia(3, p);
    if (!xy) throw Error(Errc::internal_mismatch, "no x^2+3y^2 form for " + std::to_string(p));
    Integer x = from_u64(xy->first);
    Integer y = from_u64(xy->second);
    return normalize_prime(CycInt(3, {x + y, 2 * y}));
}

CycInt find_prime_general(const SymmetryOrder& n, std::uint64_t p, unsigned coeff_bound) {
    require_cn1(n);
    auto c = classify_prime(n, p);
    require_splitting(c, n);
    if (coeff_bound == 0) throw Error(Errc::invalid_argument, "coefficient bound must be >= 1");
    const unsigned phi = n.degree;
    const Integer target = c.basic_index;
    const double target_d = target.get_d();

    // One embedding per conjugate pair is enough: |norm| = prod |sigma_a|^2.
    std::vector<unsigned> reps;
    for (unsigned a = 1; a < n.n; ++a)
        if (std::gcd(a, n.n) == 1 && a < n.n - a) reps.push_back(a);
    std::vector<std::vector<std::complex<double>>> root(reps.size(),
                                                        std::vector<std::complex<double>>(phi));
    for (std::size_t r = 0; r < reps.size(); ++r)
        for (unsigned k = 0; k < phi; ++k)
            root[r][k] = std::polar(1.0, 2 * std::numbers::pi * ((reps[r] * k) % n.n) / n.n);

    const long B = coeff_bound;
    std::vector<long> v(phi, -B);
    while (true) {
        double approx = 1.0;
        for (std::size_t r = 0; r < reps.size(); ++r) {
            std::complex<double> z = 0;
            for (unsigned k = 0; k < phi; ++k) z += static_cast<double>(v[k]) * root[r][k];
            approx *= std::norm(z);
        }
        if (std::abs(approx - target_d) <= 1e-6 * target_d + 0.5) {
            std::vector<Integer> coeffs(v.begin(), v.end());
            CycInt omega(n.n, coeffs);
            if (abs(omega.norm()) == target && !associated_by_root_of_unity(omega, omega.conjugate()))
                return omega;
        }
        // next vector in lexicographic order
        std::size_t k = phi;
        while (k > 0 && v[k - 1] == B) {
            v[k - 1] = -B;
            --k;
        }
        if (k == 0) break;
        ++v[k - 1];
    }
    throw Error(Errc::search_exhausted, "no prime element above " + std::to_string(p) +
                                            " with coefficients in [-" +
                                            std::to_string(coeff_bound) + ", " +
                                            std::to_string(coeff_bound) + "]");
}

CycInt find_prime(const SymmetryOrder& n, std::uint64_t p) {
    for (unsigned b = 2;; b *= 2) {
        try {
            return find_prime_general(n, p, b);
        } catch (const Error& e) {
            if (e.code() != Errc::search_exhausted || b >= 16) throw;
        }
    }
}

std::vector<PrimePairData> prime_pairs(const SymmetryOrder& n, std::uint64_t p) {
    require_cn1(n);
    auto c = classify_prime(n, p);
    require_splitting(c, n);
    CycInt omega0 = (n.n == 3 || n.n == 4) ? split_prime_quadratic(n.n, p).omega : find_prime(n, p);

    // Distinct prime ideals among the Galois conjugates of omega0.
    std::vector<CycInt> ideals;
    for (unsigned a = 1; a < n.n; ++a) {
        if (std::gcd(a, n.n) != 1) continue;
        CycInt cand = omega0.galois(a);
        bool seen = false;
        for (const auto& q : ideals) {
            if (exact_divide(cand, q)) {
                seen = true;
                break;
            }
        }
        if (!seen) ideals.push_back(cand);
    }
    if (ideals.size() != 2 * c.pairs) {
        throw Error(Errc::internal_mismatch,
                    "found " + std::to_string(ideals.size()) + " primes above " + std::to_string(p) +
                        ", expected " + std::to_string(2 * c.pairs));
    }

    std::vector<bool> used(ideals.size(), false);
    std::vector<PrimePairData> out;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        CycInt bar = ideals[i].conjugate();
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            if (!used[j] && exact_divide(bar, ideals[j])) {
                used[j] = true;
                break;
            }
        }
        PrimePairData d;
        d.degK = c.degK;
        d.prime = normalize_prime(ideals[i]);
        d.conj = d.prime.omega.conjugate();
        out.push_back(std::move(d));
    }
    if (out.size() != c.pairs) {
        throw Error(Errc::internal_mismatch, "conjugate pairing failed above " + std::to_string(p));
    }
    std::sort(out.begin(), out.end(), [](const PrimePairData& a, const PrimePairData& b) {
        return a.prime.omega.coeffs() < b.prime.omega.coeffs();
    });
    for (unsigned k = 0; k < out.size(); ++k) out[k].label = {p, k};
    return out;
}

const std::vector<PrimePairData>& OmegaStore::pairs(std::uint64_t p) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(p);
        if (it != cache_.end()) return *it->second;
    }
    // The search runs unlocked; a racing duplicate computes the same value.
    auto v = std::make_unique<std::vector<PrimePairData>>(prime_pairs(n_, p));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(p, std::move(v));
    return *it->second;
}

const PrimePairData& OmegaStore::pair(const PairLabel& label) const {
    const std::vector<PrimePairData>* v = nullptr;
    try {
        v = &pairs(label.p);
    } catch (const Error& e) {
        if (e.code() == Errc::search_exhausted) throw;
        throw Error(Errc::missing_omega, "no prime pair " + label_str(label) + ": " + e.what());
    }
    if (label.pair >= v->size()) {
        throw Error(Errc::missing_omega, "prime " + std::to_string(label.p) + " has only " +
                                             std::to_string(v->size()) + " pair(s)");
    }
    return (*v)[label.pair];
}

const OmegaStore& omega_store(const SymmetryOrder& n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<OmegaStore>> stores;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = stores[n.n];
    if (!slot) slot = std::make_unique<OmegaStore>(n);
    return *slot;
}

Gamma word_to_gamma(const RotationWord& w) { return word_to_gamma(w, omega_store(w.n)); }

Gamma word_to_gamma(const RotationWord& w, const OmegaStore& store) {
    const unsigned n = w.n.n;
    const long N = w.n.N;
    Gamma g{CycInt::one(n), CycInt::one(n), 0.0};
    long unit = w.unit_exp;
    for (const auto& [label, e] : w.exponents) {
        const auto& pd = store.pair(label);
        unit += e * pd.prime.unit_shift;
        const unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
        if (e > 0) {
            g.num = g.num * pd.prime.omega.pow(k);
            g.den = g.den * pd.conj.pow(k);
        } else {
            g.num = g.num * pd.conj.pow(k);
            g.den = g.den * pd.prime.omega.pow(k);
        }
    }
    g.num = CycInt::unit_pow(n, mod(unit, N)) * g.num;
    g.angle = std::arg(g.num.embed() / g.den.embed());
    return g;
}

Integer sigma(const RotationWord& w) {
    Integer s = 1;
    for (const auto& [label, e] : w.exponents) {
        auto c = classify_prime(w.n, label.p);
        s *= pow(from_u64(label.p), c.degK * static_cast<unsigned long>(e > 0 ? e : -e));
    }
    return s;
}

std::vector<RotationWord> enumerate_rotations(const SymmetryOrder& n, std::uint64_t bound) {
    require_cn1(n);
    struct Slot {
        PairLabel label;
        Integer index;
    };
    std::vector<Slot> slots;
    for (const auto& c : splitting_primes(n, bound))
        for (unsigned k = 0; k < c.pairs; ++k) slots.push_back({{c.p, k}, c.basic_index});

    std::vector<std::pair<Integer, RotationWord>> found;
    const Integer b = from_u64(bound);
    RotationWord cur = RotationWord::identity(n);
    auto rec = [&](auto&& self, std::size_t from, const Integer& m) -> void {
        found.emplace_back(m, cur);
        for (std::size_t i = from; i < slots.size(); ++i) {
            Integer next = m * slots[i].index;
            if (next > b) break;
            for (long e = 1; next <= b; ++e, next *= slots[i].index) {
                for (long sgn : {1L, -1L}) {
                    cur.exponents[slots[i].label] = sgn * e;
                    self(self, i + 1, next);
                }
                cur.exponents.erase(slots[i].label);
            }
        }
    };
    if (bound >= 1) rec(rec, 0, Integer(1));
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second.exponents < y.second.exponents;
    });
    std::vector<RotationWord> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

RotationWord compose(const RotationWord& w1, const RotationWord& w2) {
    if (w1.n.n != w2.n.n) {
        throw Error(Errc::mismatched_order, "composing words of orders " + std::to_string(w1.n.n) +
                                                " and " + std::to_string(w2.n.n));
    }
    // (gamma1 c1)(gamma2 c2) = gamma1 * c1(gamma2) * c1 c2, and conj(g_k) = 1/g_k
    const long sign = w1.conjugated ? -1 : 1;
    RotationWord out = w1;
    out.unit_exp = mod(w1.unit_exp + sign * w2.unit_exp, w1.n.N);
    for (const auto& [label, e] : w2.exponents) {
        long v = out.exponents[label] + sign * e;
        if (v == 0) {
            out.exponents.erase(label);
        } else {
            out.exponents[label] = v;
        }
    }
    out.conjugated = w1.conjugated != w2.conjugated;
    return out;
}

RotationWord inverse(const RotationWord& w) {
    if (w.conjugated) return w;  // reflections are involutions
    RotationWord out = w;
    out.unit_exp = mod(-w.unit_exp, w.n.N);
    for (auto& [label, e] : out.exponents) e = -e;
    return out;
}

RatMatrix word_matrix(const RotationWord& w) { return word_matrix(w, omega_store(w.n)); }

RatMatrix word_matrix(const RotationWord& w, const OmegaStore& store) {
    auto g = word_to_gamma(w, store);
    RatMatrix m = to_rational(g.num.multiplication_matrix()) *
                  inverse(to_rational(g.den.multiplication_matrix()));
    if (!w.conjugated) return m;
    const unsigned phi = w.n.degree;
    IntMatrix c(phi, phi);
    for (unsigned j = 0; j < phi; ++j) {
        CycInt col = CycInt::xi_pow(w.n.n, j).conjugate();
        for (unsigned i = 0; i < phi; ++i) c(i, j) = col.coeffs()[i];
    }
    return m * to_rational(c);
}

}  // namespace csm
