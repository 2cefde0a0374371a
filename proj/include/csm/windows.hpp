#pragma once

// Acceptance factors for cut-and-project windows: closed forms for regular
// polygon windows, the internal-space angle, and a clipping oracle.

#include <utility>

#include "csm/arith.hpp"
#include "csm/rotation_words.hpp"

namespace csm {

struct AcceptanceInput {
    unsigned n_gon = 0;
    double psi = 0.0;
    double psi_hat = 0.0;  // psi reduced to [0, 2 pi / n_gon)
};

AcceptanceInput reduce_angle(unsigned n_gon, double psi);

/// 1 - (1 - 1/sqrt 2) sin(psi_hat) sin(pi/4 - psi_hat)
double acceptance_octagon(double psi);

/// 1 - (sin(alpha/2)/sin(alpha))^2 sin(psi_hat) sin(alpha - psi_hat), alpha = 2 pi / n_gon
double acceptance_ngon(unsigned n_gon, double psi);

/// area(W ∩ R_psi W) / area(W) for the regular n_gon-gon W, by convex clipping.
double polygon_overlap_area(unsigned n_gon, double psi, double offset = -1.0);

/// Two regular polygons with a common incircle overlap in a tangential 2n-gon:
/// 1 - tan(psi_hat/2) tan((alpha - psi_hat)/2).
double tangential_overlap(unsigned n_gon, double psi);

struct AnglePair {
    double phi = 0.0;
    double psi = 0.0;
};

/// n = 8, 12: phi = 2 atan(a + b s), psi = 2 atan(a - b s), s = sqrt 2 or sqrt 3;
/// n = 10: tan(phi/2) = (a + b tau) sin(2pi/5), tan(psi/2) = (a + b tau') sin(4pi/5).
AnglePair internal_angle(unsigned n, const Rational& a, const Rational& b);

/// Exact (a, b) with tan(phi/2) = a + b s for a coincidence word of order 8 or 12.
std::pair<Rational, Rational> word_tangent(const RotationWord& w);

}  // namespace csm
