#pragma once

// Brute-force coincidence indices from integer linear algebra alone.

#include <optional>

#include "csm/cycint.hpp"
#include "csm/linalg.hpp"
#include "csm/rotation_words.hpp"
#include "csm/splitting.hpp"

namespace csm {

/// Full-rank sublattice of Z^k; columns of `basis` are the generators.
struct IntLattice {
    IntMatrix basis;
    std::size_t rank() const noexcept { return basis.rows(); }
};

IntLattice make_lattice(IntMatrix basis);

/// Basis of L1 ∩ L2.
IntMatrix intersection_basis(const IntLattice& l1, const IntLattice& l2);

/// [L1 : L1 ∩ L2].
Integer intersection_index(const IntLattice& l1, const IntLattice& l2);

/// [Z^k : Z^k ∩ M Z^k] for a nonsingular rational M.
Integer rational_coincidence_index(const RatMatrix& m);

/// [Z^phi : Z^phi ∩ gamma Z^phi] for gamma = num / den acting on the power basis.
Integer csm_index_oracle(const SymmetryOrder& n, const CycInt& num, const CycInt& den);

/// Point sets defined by a congruence modulo a prime of norm 2 or 3:
///   GAMMA4  n=4, alpha != 0 (mod 1+i)
///   HEX_H   n=3, alpha != 0 (mod 1+rho)
///   HEX_G   n=3, alpha == 1 (mod 1+rho)
/// with rho = exp(i pi / 3) = 1 + xi.
enum class ShiftedCase { GAMMA4, HEX_H, HEX_G };

struct ShiftedResult {
    bool is_coincidence = false;
    std::optional<Integer> index;
};

/// Counts coincidence cosets directly; index is |P| density over |P ∩ R P| density.
ShiftedResult shifted_center_check(ShiftedCase c, const RotationWord& w);

/// Prediction from congruences alone, used to cross-check the count.
bool shifted_center_predicted(ShiftedCase c, const RotationWord& w);

}  // namespace csm
