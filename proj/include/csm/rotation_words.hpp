#pragma once

// Coincidence rotations written as words in prime pairs,
//   gamma = eta^u * prod_k g_k^(n_k),   g_k = eta^(u_k) * omega_k / conj(omega_k),
// together with the prime elements omega_k that make them concrete.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "csm/cycint.hpp"
#include "csm/splitting.hpp"

namespace csm {

struct PairLabel {
    std::uint64_t p = 0;
    unsigned pair = 0;
    friend auto operator<=>(const PairLabel&, const PairLabel&) = default;
};

struct RotationWord {
    SymmetryOrder n;
    long unit_exp = 0;  // power of eta, kept in [0, N)
    std::map<PairLabel, long> exponents;  // zero exponents are never stored
    bool conjugated = false;

    static RotationWord identity(const SymmetryOrder& n);
    friend bool operator==(const RotationWord& a, const RotationWord& b) {
        return a.n.n == b.n.n && a.unit_exp == b.unit_exp && a.exponents == b.exponents &&
               a.conjugated == b.conjugated;
    }
};

/// A prime element normalized so that eta^unit_shift * omega / conj(omega)
/// has argument in (0, pi/N); unit_shift is 0 or 1.
struct NormalizedPrime {
    CycInt omega;
    int unit_shift = 0;
};

/// Chooses the associate (of omega or of its conjugate) described above.
NormalizedPrime normalize_prime(const CycInt& omega);

/// Cornacchia-based split of p in Z[i] (n=4) or Z[xi_3] (n=3), normalized.
NormalizedPrime split_prime_quadratic(unsigned n, std::uint64_t p);

/// Lexicographically first omega in [-B, B]^phi with |norm| = p^deg_k and
/// omega / conj(omega) not a root of unity. Throws search_exhausted.
CycInt find_prime_general(const SymmetryOrder& n, std::uint64_t p, unsigned coeff_bound);

/// Same search with the bound doubled from 2 up to 16.
CycInt find_prime(const SymmetryOrder& n, std::uint64_t p);

struct PrimePairData {
    PairLabel label;
    unsigned degK = 0;
    NormalizedPrime prime;
    CycInt conj;  // conjugate of prime.omega
};

/// All conjugate pairs above a splitting prime, ordered by pair id.
std::vector<PrimePairData> prime_pairs(const SymmetryOrder& n, std::uint64_t p);

/// Lazily filled, read-only-after-fill cache of prime_pairs for one n.
class OmegaStore {
public:
    explicit OmegaStore(const SymmetryOrder& n) : n_(n) {}
    const std::vector<PrimePairData>& pairs(std::uint64_t p) const;
    const PrimePairData& pair(const PairLabel& label) const;
    const SymmetryOrder& order() const noexcept { return n_; }

private:
    SymmetryOrder n_;
    mutable std::mutex mu_;
    mutable std::map<std::uint64_t, std::unique_ptr<std::vector<PrimePairData>>> cache_;
};

/// Process-wide store per order.
const OmegaStore& omega_store(const SymmetryOrder& n);

struct Gamma {
    CycInt num;
    CycInt den;
    double angle = 0.0;
};

Gamma word_to_gamma(const RotationWord& w);
Gamma word_to_gamma(const RotationWord& w, const OmegaStore& store);

Integer sigma(const RotationWord& w);

/// One word per CSM (unit_exp 0, not conjugated) with sigma <= bound,
/// sorted by sigma and then by exponents.
std::vector<RotationWord> enumerate_rotations(const SymmetryOrder& n, std::uint64_t bound);

RotationWord compose(const RotationWord& w1, const RotationWord& w2);
RotationWord inverse(const RotationWord& w);

/// The isometry as a rational matrix on the power basis of Z^phi(n):
/// x -> gamma * x, or gamma * conj(x) when conjugated.
RatMatrix word_matrix(const RotationWord& w);
RatMatrix word_matrix(const RotationWord& w, const OmegaStore& store);

}  // namespace csm
