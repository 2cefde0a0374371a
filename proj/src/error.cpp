#include "csm/error.hpp"

namespace csm {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_order: return "invalid-order";
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::not_prime: return "not-prime";
        case Errc::too_large: return "too-large";
        case Errc::ramified_unsupported: return "ramified-unsupported";
        case Errc::delegated_to_class_number: return "delegated-to-class_number";
        case Errc::unsupported_class_number: return "unsupported-class-number";
        case Errc::not_tabulated: return "not-tabulated";
        case Errc::not_splitting: return "not-splitting";
        case Errc::search_exhausted: return "search-exhausted";
        case Errc::missing_omega: return "missing-omega";
        case Errc::mismatched_order: return "mismatched-order";
        case Errc::ramified: return "ramified";
        case Errc::divisibility_violation: return "divisibility-violation";
        case Errc::rank_mismatch: return "rank-mismatch";
        case Errc::den_zero: return "den-zero";
        case Errc::non_unit_modulus: return "non-unit-modulus";
        case Errc::unsupported_case: return "unsupported-case";
        case Errc::not_representable: return "not-representable";
        case Errc::internal_mismatch: return "internal-mismatch";
    }
    return "unknown";
}

}  // namespace csm
