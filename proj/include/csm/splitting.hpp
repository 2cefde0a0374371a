#pragma once

// How rational primes factor in the n-th cyclotomic field K and its real
// subfield L, and the basic coincidence indices that follow from it.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "csm/arith.hpp"

namespace csm {

struct SymmetryOrder {
    unsigned n = 0;       // canonical: odd or divisible by 4
    unsigned N = 0;       // lcm(n, 2), the rotational symmetry of the module
    unsigned degree = 0;  // phi(n)
    bool cn1 = false;
};

/// Accepts any requested order >= 3 and halves it when it is 2 mod 4.
SymmetryOrder normalize_symmetry(unsigned requested);

/// The 29 orders whose cyclotomic field has class number one.
const std::vector<unsigned>& cn1_orders();
bool is_cn1(const SymmetryOrder& n);

struct PrimeSplitting {
    std::uint64_t p = 0;
    unsigned residue = 0;
    bool ramified = false;
    unsigned degK = 0;
    unsigned degL = 0;
    bool splitting = false;
    unsigned pairs = 0;     // conjugate pairs of primes above p, 0 if not splitting
    Integer basic_index;    // p^degK when splitting, 0 otherwise
};

unsigned deg_k(const SymmetryOrder& n, std::uint64_t p);
/// Throws ramified_unsupported when p | n.
unsigned deg_l(const SymmetryOrder& n, std::uint64_t p);
PrimeSplitting classify_prime(const SymmetryOrder& n, std::uint64_t p);

struct ResidueEntry {
    unsigned degK = 0;
    std::optional<unsigned> degL;  // omitted for odd prime powers, where degK decides
    bool splitting = false;
    friend bool operator==(const ResidueEntry&, const ResidueEntry&) = default;
};

/// Keyed by the coprime residues 1..n-1 and by the ramified primes themselves.
std::map<unsigned, ResidueEntry> residue_table(const SymmetryOrder& n);

/// Splitting primes p (with their degree d) such that p^d <= bound, ascending by p^d.
std::vector<PrimeSplitting> splitting_primes(const SymmetryOrder& n, std::uint64_t bound);
std::vector<Integer> basic_indices(const SymmetryOrder& n, std::uint64_t bound);

}  // namespace csm
