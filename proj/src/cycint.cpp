#include "csm/cycint.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "csm/error.hpp"

namespace csm {

namespace {

using Poly = std::vector<Integer>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact division by a monic polynomial.
Poly poly_divexact_monic(Poly a, const Poly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    if (a.size() < m.size()) return {};
    Poly q(a.size() - dm, 0);
    for (std::size_t k = a.size(); k-- > dm;) {
        Integer c = a[k];
        q[k - dm] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) a[k - dm + j] -= c * m[j];
    }
    return q;
}

std::shared_ptr<const CyclotomicRing> build_ring(unsigned n) {
    auto r = std::make_shared<CyclotomicRing>();
    r->n = n;
    r->poly = cyclotomic_polynomial(n);
    r->phi = static_cast<unsigned>(r->poly.size() - 1);
    const unsigned phi = r->phi;
    r->xi_pows.assign(n, Poly(phi, 0));
    Poly cur(phi, 0);
    cur[0] = 1;
    if (phi == 1) {
        // n in {1, 2}: xi is a rational integer
        for (unsigned k = 0; k < n; ++k) r->xi_pows[k][0] = (n == 2 && k % 2 == 1) ? -1 : 1;
        return r;
    }
    for (unsigned k = 0; k < n; ++k) {
        r->xi_pows[k] = cur;
        // multiply by xi: shift up, reduce x^phi = -(poly[0] + ... + poly[phi-1] x^(phi-1))
        Integer top = cur[phi - 1];
        for (unsigned j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned j = 0; j < phi; ++j) cur[j] -= top * r->poly[j];
    }
    return r;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(Errc::invalid_order, "cyclotomic polynomial of order 0");
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d : divisors(n)) {
        if (d == n) continue;
        p = poly_divexact_monic(p, cyclotomic_polynomial(d));
    }
    trim(p);
    return p;
}

std::shared_ptr<const CyclotomicRing> cyclotomic_ring(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CyclotomicRing>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    auto r = build_ring(n);
    memo.emplace(n, r);
    return r;
}

Integer resultant(const std::vector<Integer>& f_in, const std::vector<Integer>& g_in) {
    Poly f = f_in;
    Poly g = g_in;
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) return 0;
    const std::size_t m = f.size() - 1;
    const std::size_t k = g.size() - 1;
    if (m == 0 && k == 0) return 1;
    if (m == 0) return csm::pow(f[0], k);
    if (k == 0) return csm::pow(g[0], m);
    // Sylvester matrix: k shifted rows of f, then m shifted rows of g, high degree first.
    const std::size_t s = m + k;
    IntMatrix syl(s, s);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= m; ++j) syl(i, i + j) = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= k; ++j) syl(k + i, i + j) = g[k - j];
    return determinant(syl);
}

CycInt::CycInt(unsigned n, std::vector<Integer> coeffs) : n_(n), ring_(cyclotomic_ring(n)) {
    const unsigned phi = ring_->phi;
    c_.assign(phi, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const auto& row = ring_->xi_pows[k % n];
        for (unsigned j = 0; j < phi; ++j)
            if (row[j] != 0) c_[j] += coeffs[k] * row[j];
    }
}

CycInt CycInt::zero(unsigned n) { return CycInt(n, {}); }

CycInt CycInt::one(unsigned n) { return CycInt(n, {Integer(1)}); }

CycInt CycInt::from_integer(unsigned n, const Integer& v) { return CycInt(n, {v}); }

CycInt CycInt::xi_pow(unsigned n, long k) {
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    Poly c(static_cast<std::size_t>(r) + 1, 0);
    c[static_cast<std::size_t>(r)] = 1;
    return CycInt(n, std::move(c));
}

CycInt CycInt::unit_pow(unsigned n, long k) {
    if (n % 2 == 0) return xi_pow(n, k);
    // eta = -xi^((n+1)/2) has order 2n and argument pi/n.
    const long N = 2L * n;
    long r = k % N;
    if (r < 0) r += N;
    CycInt x = xi_pow(n, r * static_cast<long>((n + 1) / 2));
    return r % 2 == 1 ? -x : x;
}

bool CycInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

CycInt CycInt::operator-() const {
    CycInt out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    if (a.n_ != b.n_) throw Error(Errc::mismatched_order, "adding elements of different fields");
    CycInt out = a;
    for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] += b.c_[j];
    return out;
}

CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.n_ != b.n_) {
        throw Error(Errc::mismatched_order, "multiplying elements of different fields");
    }
    return CycInt(a.n_, poly_mul(a.c_, b.c_));
}

CycInt CycInt::pow(unsigned long e) const {
    CycInt result = one(n_);
    CycInt base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e) base = base * base;
    }
    return result;
}

CycInt CycInt::conjugate() const { return galois(n_ - 1); }

CycInt CycInt::galois(unsigned a) const {
    Poly c(n_, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        c[(k * a) % n_] += c_[k];
    }
    return CycInt(n_, std::move(c));
}

Integer CycInt::norm() const { return resultant(ring_->poly, c_); }

std::complex<double> CycInt::embed(unsigned a) const {
    std::complex<double> out = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const double ang = 2 * std::numbers::pi * static_cast<double>((k * a) % n_) / n_;
        out += c_[k].get_d() * std::polar(1.0, ang);
    }
    return out;
}

IntMatrix CycInt::multiplication_matrix() const {
    const unsigned phi = ring_->phi;
    IntMatrix m(phi, phi);
    for (unsigned j = 0; j < phi; ++j) {
        CycInt col = *this * xi_pow(n_, j);
        for (unsigned i = 0; i < phi; ++i) m(i, j) = col.c_[i];
    }
    return m;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? ", " : "") << c_[k].get_str();
    os << ']';
    return os.str();
}

std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b) {
    if (b.is_zero()) throw Error(Errc::den_zero, "division by zero");
    if (a.order() != b.order()) throw Error(Errc::mismatched_order, "dividing across fields");
    RatMatrix inv = inverse(to_rational(b.multiplication_matrix()));
    const unsigned phi = a.degree();
    std::vector<Integer> q(phi);
    for (unsigned i = 0; i < phi; ++i) {
        Rational s = 0;
        for (unsigned j = 0; j < phi; ++j) s += inv(i, j) * a.coeffs()[j];
        s.canonicalize();
        if (s.get_den() != 1) return std::nullopt;
        q[i] = s.get_num();
    }
    return CycInt(a.order(), std::move(q));
}

bool associated_by_root_of_unity(const CycInt& a, const CycInt& b) {
    const unsigned n = a.order();
    const long N = n % 2 == 1 ? 2L * n : n;
    for (long j = 0; j < N; ++j)
        if (CycInt::unit_pow(n, j) * a == b) return true;
    return false;
}

}  // namespace csm
