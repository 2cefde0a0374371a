#include "csm/lattice.hpp"

#include <cmath>
#include <string>

#include "csm/error.hpp"

namespace csm {

namespace {

Integer lcm_of_denominators(const RatMatrix& m) {
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j);
            v.canonicalize();
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
        }
    return d;
}

IntMatrix scaled_to_integer(const RatMatrix& m, const Integer& d) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * d;
            v.canonicalize();
            out(i, j) = v.get_num();
        }
    return out;
}

IntMatrix scalar_matrix(std::size_t k, const Integer& d) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = d;
    return m;
}

struct CongruenceSet {
    CycInt pi;
    unsigned p;                    // norm of pi
    std::vector<unsigned> allowed;  // residues r in 0..p-1 with alpha = r (mod pi)
};

CongruenceSet congruence_for(ShiftedCase c) {
    switch (c) {
        case ShiftedCase::GAMMA4:
            return {CycInt(4, {Integer(1), Integer(1)}), 2, {1}};
        case ShiftedCase::HEX_H:
            return {CycInt(3, {Integer(2), Integer(1)}), 3, {1, 2}};
        case ShiftedCase::HEX_G:
            return {CycInt(3, {Integer(2), Integer(1)}), 3, {1}};
    }
    throw Error(Errc::unsupported_case, "unknown shifted-centre case");
}

// Residue of an integer vector modulo pi, as an element of F_p.
class ResidueMap {
public:
    explicit ResidueMap(const CongruenceSet& s) : s_(s) {
        inv_ = inverse(to_rational(s.pi.multiplication_matrix()));
    }

    unsigned residue(const std::vector<Integer>& v) const {
        for (unsigned r = 0; r < s_.p; ++r)
            if (divisible(v, r)) return r;
        throw Error(Errc::internal_mismatch, "no residue modulo a prime of degree one");
    }

    bool member(const std::vector<Integer>& v) const {
        unsigned r = residue(v);
        for (unsigned a : s_.allowed)
            if (a == r) return true;
        return false;
    }

private:
    bool divisible(const std::vector<Integer>& v, unsigned r) const {
        const std::size_t k = v.size();
        for (std::size_t i = 0; i < k; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < k; ++j) s += inv_(i, j) * (v[j] - (j == 0 ? r : 0));
            s.canonicalize();
            if (s.get_den() != 1) return false;
        }
        return true;
    }

    const CongruenceSet& s_;
    RatMatrix inv_;
};

std::vector<Integer> map_point(const RatMatrix& m, const std::vector<Integer>& v) {
    std::vector<Integer> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        s.canonicalize();
        if (s.get_den() != 1) throw Error(Errc::internal_mismatch, "point left the lattice");
        out[i] = s.get_num();
    }
    return out;
}

void require_order(ShiftedCase c, const RotationWord& w) {
    unsigned want = c == ShiftedCase::GAMMA4 ? 4 : 3;
    if (w.n.n != want) {
        throw Error(Errc::unsupported_case, "case needs n=" + std::to_string(want) + ", word has n=" +
                                                std::to_string(w.n.n));
    }
}

}  // namespace

IntLattice make_lattice(IntMatrix basis) {
    if (basis.rows() != basis.cols()) throw Error(Errc::rank_mismatch, "basis must be square");
    if (determinant(basis) == 0) throw Error(Errc::rank_mismatch, "basis is singular");
    return IntLattice{std::move(basis)};
}

IntMatrix intersection_basis(const IntLattice& l1, const IntLattice& l2) {
    const std::size_t k = l1.rank();
    if (l2.rank() != k) throw Error(Errc::rank_mismatch, "lattices of different rank");
    // B1 x = B2 y  <=>  [B1 | -B2] (x, y) = 0; the intersection is B1 X.
    IntMatrix sys(k, 2 * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            sys(i, j) = l1.basis(i, j);
            sys(i, k + j) = -l2.basis(i, j);
        }
    IntMatrix ker = integer_kernel(sys);
    if (ker.cols() != k) throw Error(Errc::rank_mismatch, "intersection is not full rank");
    IntMatrix x(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) x(i, j) = ker(i, j);
    return l1.basis * x;
}

Integer intersection_index(const IntLattice& l1, const IntLattice& l2) {
    IntMatrix meet = intersection_basis(l1, l2);
    Integer num = abs(determinant(meet));
    Integer den = abs(determinant(l1.basis));
    return num / den;
}

Integer rational_coincidence_index(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::rank_mismatch, "matrix must be square");
    // [Z^k : Z^k ∩ (A/D) Z^k] = [D Z^k : D Z^k ∩ A Z^k]
    Integer d = lcm_of_denominators(m);
    IntMatrix a = scaled_to_integer(m, d);
    return intersection_index(make_lattice(scalar_matrix(m.rows(), d)), make_lattice(a));
}

Integer csm_index_oracle(const SymmetryOrder& n, const CycInt& num, const CycInt& den) {
    if (den.is_zero()) throw Error(Errc::den_zero, "denominator is zero");
    if (num.order() != n.n || den.order() != n.n) {
        throw Error(Errc::mismatched_order, "elements are not in Q(zeta_" + std::to_string(n.n) + ")");
    }
    const double modulus = std::abs(num.embed() / den.embed());
    if (!(std::abs(modulus - 1.0) <= 1e-9)) {
        throw Error(Errc::non_unit_modulus, "|num/den| = " + std::to_string(modulus));
    }
    RatMatrix m =
        to_rational(num.multiplication_matrix()) * inverse(to_rational(den.multiplication_matrix()));
    return rational_coincidence_index(m);
}

ShiftedResult shifted_center_check(ShiftedCase c, const RotationWord& w) {
    require_order(c, w);
    const CongruenceSet set = congruence_for(c);
    const ResidueMap res(set);
    const std::size_t k = w.n.degree;
    RatMatrix r = word_matrix(w);
    RatMatrix r_inv = inverse(r);

    // Both P and R P are unions of cosets of M = pi O ∩ R pi O, and
    // P ∩ R P lives in C = Z^k ∩ R Z^k.
    IntLattice zk = make_lattice(IntMatrix::identity(k));
    IntLattice lam = make_lattice(set.pi.multiplication_matrix());
    Integer d = lcm_of_denominators(r);
    IntMatrix rz = scaled_to_integer(r, d);  // R Z^k scaled by d
    IntMatrix rlam = rz * lam.basis;          // R pi O scaled by d

    auto meet_scaled = [&](const IntMatrix& plain, const IntMatrix& scaled) {
        IntLattice a = make_lattice(scalar_matrix(k, d) * plain);
        IntLattice b = make_lattice(scaled);
        return intersection_basis(a, b);
    };
    auto unscale = [&](IntMatrix m) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) /= d;
        return m;
    };
    IntMatrix cbasis = lattice_basis(unscale(meet_scaled(zk.basis, rz)));
    IntMatrix mbasis = lattice_basis(unscale(meet_scaled(lam.basis, rlam)));

    // M in coordinates of C, brought to triangular form; the box of its
    // diagonal is a full set of coset representatives of C / M.
    RatMatrix coords = inverse(to_rational(cbasis)) * to_rational(mbasis);
    IntMatrix x = lattice_basis(scaled_to_integer(coords, Integer(1)));
    std::vector<Integer> diag(k);
    for (std::size_t i = 0; i < k; ++i) diag[i] = x(i, i);

    Integer good = 0;
    std::vector<Integer> v(k, 0);
    while (true) {
        std::vector<Integer> point(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) point[i] += cbasis(i, j) * v[j];
        if (res.member(point) && res.member(map_point(r_inv, point))) ++good;
        std::size_t i = 0;
        while (i < k && ++v[i] == diag[i]) v[i++] = 0;
        if (i == k) break;
    }

    ShiftedResult out;
    if (good == 0) return out;
    Integer num = static_cast<unsigned long>(set.allowed.size()) * abs(determinant(mbasis));
    Integer den = abs(determinant(lam.basis)) * good;
    if (num % den != 0) {
        throw Error(Errc::internal_mismatch, "non-integral coincidence index " + num.get_str() + "/" +
                                                 den.get_str());
    }
    out.is_coincidence = true;
    out.index = num / den;
    return out;
}

bool shifted_center_predicted(ShiftedCase c, const RotationWord& w) {
    require_order(c, w);
    if (c != ShiftedCase::HEX_G) return true;
    // x -> gamma x (or gamma conj x) keeps the class 1 iff num = den (mod pi);
    // conjugation fixes residues since the prime above 3 is self-conjugate.
    auto g = word_to_gamma(w);
    const CongruenceSet set = congruence_for(c);
    return exact_divide(g.num - g.den, set.pi).has_value();
}

}  // namespace csm
