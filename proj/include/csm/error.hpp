#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csm {

enum class Errc {
    invalid_order,          // symmetry order below 3
    invalid_argument,       // malformed or out-of-range input
    not_prime,              // composite where a prime is required
    too_large,              // above the factorization guard
    ramified_unsupported,   // deg_L asked for a ramified prime
    delegated_to_class_number,
    unsupported_class_number,
    not_tabulated,
    not_splitting,
    search_exhausted,
    missing_omega,
    mismatched_order,
    ramified,
    divisibility_violation,
    rank_mismatch,
    den_zero,
    non_unit_modulus,
    unsupported_case,
    not_representable,      // tan(phi/2) not in the real quadratic subfield
    internal_mismatch,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace csm
