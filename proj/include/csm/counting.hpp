#pragma once

// Coincidence indices of the class-number-one modules and their counting
// function f(m), with the square-lattice special functions alongside.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csm/arith.hpp"
#include "csm/splitting.hpp"

namespace csm {

struct DirichletTable {
    std::vector<std::pair<Integer, Integer>> entries;  // (m, f(m)), ascending, f(m) > 0
    Integer bound;  // every nonzero term with m <= bound is present
};

struct AverageConstant {
    unsigned n = 0;
    double value = 0.0;
    std::string closed_form;
};

/// Coefficient of t^j in ((1+t)/(1-t))^r.
Integer euler_coeff(unsigned r, unsigned j);

bool is_coincidence_index(const SymmetryOrder& n, std::uint64_t m,
                          std::uint64_t factor_limit = kDefaultFactorLimit);
Integer f(const SymmetryOrder& n, std::uint64_t m, std::uint64_t factor_limit = kDefaultFactorLimit);
Integer fhat(const SymmetryOrder& n, std::uint64_t m,
             std::uint64_t factor_limit = kDefaultFactorLimit);

DirichletTable dirichlet_terms(const SymmetryOrder& n, std::size_t count);
/// All nonzero terms with m <= bound.
DirichletTable dirichlet_terms_upto(const SymmetryOrder& n, std::uint64_t bound);

std::uint64_t d_star(std::uint64_t m);
std::uint64_t r_of(std::uint64_t M);
std::uint64_t r_star(std::uint64_t m);

AverageConstant average_csm(const SymmetryOrder& n);

}  // namespace csm
