#include "csm/linalg.hpp"

#include <sstream>
#include <utility>

#include "csm/error.hpp"

namespace csm {

namespace {

void require_square(std::size_t r, std::size_t c) {
    if (r != c) throw Error(Errc::rank_mismatch, "matrix is not square");
}

// (col a, col b) <- (x*a + y*b, u*a + v*b)
void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                  const Integer& u, const Integer& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer ca = m(i, a);
        Integer cb = m(i, b);
        m(i, a) = x * ca + y * cb;
        m(i, b) = u * ca + v * cb;
    }
}

// col a <- col a - q * col b
void sub_col(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

void negate_col(IntMatrix& m, std::size_t a) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

}  // namespace

Integer determinant(const IntMatrix& in) {
    require_square(in.rows(), in.cols());
    const std::size_t n = in.rows();
    if (n == 0) return 1;
    IntMatrix a = in;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& in) {
    require_square(in.rows(), in.cols());
    RatMatrix a = in;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a(r, k) == 0) ++r;
        if (r == n) return 0;
        if (r != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational q = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= q * a(k, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& in) {
    require_square(in.rows(), in.cols());
    const std::size_t n = in.rows();
    RatMatrix a = in;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a(r, k) == 0) ++r;
        if (r == n) throw Error(Errc::invalid_argument, "matrix is singular");
        if (r != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(r, j));
                std::swap(inv(k, j), inv(r, j));
            }
        }
        Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational q = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= q * a(k, j);
                inv(i, j) -= q * inv(k, j);
            }
        }
    }
    return inv;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

ColumnHnf column_hnf(const IntMatrix& a) {
    ColumnHnf res;
    res.H = a;
    res.U = IntMatrix::identity(a.cols());
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;
    std::size_t r = 0;
    for (std::size_t i = 0; i < H.rows() && r < H.cols(); ++i) {
        // Fold every entry of row i right of the pivot column into column r.
        for (std::size_t j = r + 1; j < H.cols(); ++j) {
            if (H(i, j) == 0) continue;
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), H(i, r).get_mpz_t(),
                       H(i, j).get_mpz_t());
            Integer u = -H(i, j) / g;
            Integer v = H(i, r) / g;
            // [x u; y v] has determinant x*v - u*y = (x*a + y*b)/g = 1
            combine_cols(H, r, j, x, y, u, v);
            combine_cols(U, r, j, x, y, u, v);
        }
        if (H(i, r) == 0) continue;
        if (H(i, r) < 0) {
            negate_col(H, r);
            negate_col(U, r);
        }
        for (std::size_t j = 0; j < r; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, r).get_mpz_t());
            sub_col(H, j, r, q);
            sub_col(U, j, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    auto h = column_hnf(a);
    const std::size_t k = a.cols() - h.rank;
    IntMatrix out(a.cols(), k);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = h.U(i, h.rank + j);
    return out;
}

IntMatrix lattice_basis(const IntMatrix& a) {
    auto h = column_hnf(a);
    if (h.rank != a.rows()) {
        throw Error(Errc::rank_mismatch, "generators do not span a full-rank lattice");
    }
    IntMatrix out(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) out(i, j) = h.H(i, j);
    return out;
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j).get_str();
    }
    os << ']';
    return os.str();
}

}  // namespace csm
