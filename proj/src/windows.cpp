#include "csm/windows.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "csm/error.hpp"
#include "csm/linalg.hpp"

namespace csm {

namespace {

using std::numbers::pi;

struct Pt {
    double x, y;
};

double cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

std::vector<Pt> regular_polygon(unsigned n, double rotation, double offset) {
    std::vector<Pt> v(n);
    for (unsigned k = 0; k < n; ++k) {
        double t = 2 * pi * k / n + offset + rotation;
        v[k] = {std::cos(t), std::sin(t)};
    }
    return v;
}

double area(const std::vector<Pt>& poly) {
    double s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt& a = poly[i];
        const Pt& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s / 2;
}

// Sutherland-Hodgman against a convex counter-clockwise clip polygon.
std::vector<Pt> clip(std::vector<Pt> subject, const std::vector<Pt>& clipper) {
    for (std::size_t e = 0; e < clipper.size() && !subject.empty(); ++e) {
        Pt a = clipper[e];
        Pt b = clipper[(e + 1) % clipper.size()];
        std::vector<Pt> out;
        for (std::size_t i = 0; i < subject.size(); ++i) {
            Pt p = subject[i];
            Pt q = subject[(i + 1) % subject.size()];
            double cp = cross(a, b, p);
            double cq = cross(a, b, q);
            if (cp >= 0) out.push_back(p);
            if ((cp >= 0) != (cq >= 0)) {
                double t = cp / (cp - cq);
                out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        subject = std::move(out);
    }
    return subject;
}

void require_ngon(unsigned n_gon) {
    if (n_gon < 3) throw Error(Errc::invalid_argument, "a polygon needs at least 3 sides");
}

}  // namespace

AcceptanceInput reduce_angle(unsigned n_gon, double psi) {
    require_ngon(n_gon);
    const double alpha = 2 * pi / n_gon;
    double hat = psi - std::floor(n_gon * psi / (2 * pi)) * alpha;
    if (hat < 0) hat = 0;
    if (hat >= alpha) hat -= alpha;
    return {n_gon, psi, hat};
}

double acceptance_octagon(double psi) {
    const double h = reduce_angle(8, psi).psi_hat;
    return 1 - (1 - 1 / std::sqrt(2.0)) * std::sin(h) * std::sin(pi / 4 - h);
}

double acceptance_ngon(unsigned n_gon, double psi) {
    const double alpha = 2 * pi / n_gon;
    const double h = reduce_angle(n_gon, psi).psi_hat;
    const double f = std::sin(alpha / 2) / std::sin(alpha);
    return 1 - f * f * std::sin(h) * std::sin(alpha - h);
}

double polygon_overlap_area(unsigned n_gon, double psi, double offset) {
    require_ngon(n_gon);
    if (offset < 0) offset = pi / n_gon;
    auto w = regular_polygon(n_gon, 0.0, offset);
    auto rw = regular_polygon(n_gon, psi, offset);
    return area(clip(rw, w)) / area(w);
}

double tangential_overlap(unsigned n_gon, double psi) {
    const double alpha = 2 * pi / n_gon;
    const double h = reduce_angle(n_gon, psi).psi_hat;
    return 1 - std::tan(h / 2) * std::tan((alpha - h) / 2);
}

AnglePair internal_angle(unsigned n, const Rational& a, const Rational& b) {
    const double ad = a.get_d();
    const double bd = b.get_d();
    switch (n) {
        case 8:
        case 12: {
            const double s = std::sqrt(n == 8 ? 2.0 : 3.0);
            return {2 * std::atan(ad + bd * s), 2 * std::atan(ad - bd * s)};
        }
        case 10: {
            const double tau = (1 + std::sqrt(5.0)) / 2;
            const double tau_c = -1 / tau;
            return {2 * std::atan((ad + bd * tau) * std::sin(2 * pi / 5)),
                    2 * std::atan((ad + bd * tau_c) * std::sin(4 * pi / 5))};
        }
        default:
            throw Error(Errc::unsupported_case, "internal angle is tabulated for n = 8, 10, 12");
    }
}

std::pair<Rational, Rational> word_tangent(const RotationWord& w) {
    const unsigned n = w.n.n;
    if (n != 8 && n != 12) throw Error(Errc::unsupported_case, "word tangent needs n = 8 or 12");
    auto g = word_to_gamma(w);
    // tan(phi/2) = (gamma - 1) / (i (gamma + 1)) = (num - den) / (i (num + den))
    const CycInt i_unit = CycInt::xi_pow(n, n / 4);
    CycInt top = g.num - g.den;
    CycInt bottom = i_unit * (g.num + g.den);
    if (bottom.is_zero()) throw Error(Errc::not_representable, "rotation by pi has no tangent");
    const unsigned k = w.n.degree;
    RatMatrix inv = inverse(to_rational(bottom.multiplication_matrix()));
    std::vector<Rational> t(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) t[i] += inv(i, j) * top.coeffs()[j];
        t[i].canonicalize();
    }
    // s = xi + xi^-1 in the power basis; solve t = a + b s
    CycInt s = CycInt::xi_pow(n, 1) + CycInt::xi_pow(n, -1);
    std::size_t piv = 1;
    while (piv < k && s.coeffs()[piv] == 0) ++piv;
    if (piv == k) throw Error(Errc::internal_mismatch, "s is rational");
    Rational b = t[piv] / Rational(s.coeffs()[piv]);
    Rational a = t[0] - b * Rational(s.coeffs()[0]);
    a.canonicalize();
    b.canonicalize();
    for (unsigned i = 0; i < k; ++i) {
        Rational expect = (i == 0 ? a : Rational(0)) + b * Rational(s.coeffs()[i]);
        if (expect != t[i]) {
            throw Error(Errc::not_representable, "tan(phi/2) is not in the real quadratic subfield");
        }
    }
    return {a, b};
}

}  // namespace csm
