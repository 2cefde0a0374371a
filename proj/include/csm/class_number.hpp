#pragma once

// n = 23 (N = 46), the first order whose cyclotomic field has class number
// greater than one. The class group is C_3 and complex conjugation inverts it;
// both facts are inputs here, not recomputed.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "csm/arith.hpp"
#include "csm/counting.hpp"

namespace csm {

enum class Kind23 { P1, P2, non_splitting, ramified };

struct PrimeClass23 {
    std::uint64_t p = 0;
    Kind23 kind = Kind23::non_splitting;
    unsigned d = 0;      // residue degree, 1 or 11 when splitting
    unsigned pairs = 0;  // 11 if p = 1 (mod 23), 1 for the other splitting primes
};

struct IndexFactorization23 {
    struct Factor {
        std::uint64_t p;
        unsigned e;
        PrimeClass23 cls;
    };
    std::vector<Factor> p1_part;
    std::vector<Factor> p2_part;
};

/// Whether 6x^2 + xy + y^2 = p has an integer solution.
bool represented_by_principal_form(std::uint64_t p);

/// Throws Errc::ramified for p = 23.
PrimeClass23 classify_p23(std::uint64_t p);

/// nullopt unless every prime power of m is a power of a basic index.
std::optional<IndexFactorization23> factor_index_23(std::uint64_t m);

bool is_index_23(std::uint64_t m);

/// Ideals of norm m of the form prod (P_k / conj P_k)^(n_k) whose class is
/// C^(2 * residue); residue 0 counts the CSMs, i.e. f(m).
Integer count_by_class_23(std::uint64_t m, unsigned residue);

Integer f_23(std::uint64_t m);
Integer fhat_23(std::uint64_t m);

DirichletTable series_23(std::size_t count);

/// Index of the reflection gamma * conj on a module p: num_norm / p_norm
/// when p divides num(gamma), num_norm * p_norm otherwise.
Integer reflection_index_23(const Integer& num_norm, const Integer& p_norm, bool divides);

struct ReflectionIndex {
    Integer index;
    Integer count;
};

/// Ascending reflection indices of a non-principal module, with multiplicities.
std::vector<ReflectionIndex> reflection_indices_nonprincipal(std::size_t count);
ReflectionIndex min_reflection_index_nonprincipal();

}  // namespace csm
