#pragma once

// Integers of Q(xi), xi = exp(2 pi i / n), in the power basis
// {1, xi, ..., xi^(phi(n)-1)}.

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csm/arith.hpp"
#include "csm/linalg.hpp"

namespace csm {

/// Per-order data shared by every CycInt of that order. Built once, then read-only.
struct CyclotomicRing {
    unsigned n = 0;
    unsigned phi = 0;
    std::vector<Integer> poly;                  // Phi_n, low degree first, monic
    std::vector<std::vector<Integer>> xi_pows;  // xi^k reduced, for 0 <= k < n
};

/// Thread-safe memo keyed by n.
std::shared_ptr<const CyclotomicRing> cyclotomic_ring(unsigned n);

/// n-th cyclotomic polynomial, low degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

/// Resultant of two integer polynomials (low degree first) via the Sylvester matrix.
Integer resultant(const std::vector<Integer>& f, const std::vector<Integer>& g);

class CycInt {
public:
    CycInt() = default;
    /// Coefficients beyond phi(n) are reduced with Phi_n.
    CycInt(unsigned n, std::vector<Integer> coeffs);

    static CycInt zero(unsigned n);
    static CycInt one(unsigned n);
    static CycInt from_integer(unsigned n, const Integer& v);
    /// xi^k for any integer k.
    static CycInt xi_pow(unsigned n, long k);
    /// eta^k, eta the primitive lcm(n,2)-th root of unity exp(2 pi i / N).
    static CycInt unit_pow(unsigned n, long k);

    unsigned order() const noexcept { return n_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(c_.size()); }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    bool is_zero() const;

    CycInt operator-() const;
    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

    CycInt pow(unsigned long e) const;
    CycInt conjugate() const;
    /// The automorphism xi -> xi^a, gcd(a, n) = 1.
    CycInt galois(unsigned a) const;

    /// Absolute norm, as Res(Phi_n, c(x)).
    Integer norm() const;

    /// Image under xi -> exp(2 pi i a / n).
    std::complex<double> embed(unsigned a = 1) const;

    /// Column j holds the coefficients of this * xi^j.
    IntMatrix multiplication_matrix() const;

    std::string to_string() const;

private:
    unsigned n_ = 0;
    std::vector<Integer> c_;
    std::shared_ptr<const CyclotomicRing> ring_;
};

/// q with a = q * b, if it exists in the ring of integers.
std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b);

/// Whether a / b is a root of unity (equivalently b = eta^j a for some j).
bool associated_by_root_of_unity(const CycInt& a, const CycInt& b);

}  // namespace csm
