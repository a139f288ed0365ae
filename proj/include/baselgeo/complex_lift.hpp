#pragma once

#include <array>
#include <complex>

#include "baselgeo/triangle.hpp"

namespace baselgeo {

// Logarithmic lift (s, t) of a triangle: e^s and e^t are the two non-base
// edges as complex numbers, closing the unit base via 1 + e^s + e^t = 0.
// Construction validates that closure to 1e-10; DomainError beyond.
struct LiftPoint {
    std::complex<double> s;
    std::complex<double> t;

    LiftPoint(std::complex<double> s, std::complex<double> t);
};

// s = log a + i(pi - beta), t = log b + i(pi + alpha).
// Requires an interior point, like angles_to_sides.
LiftPoint lift_from_angles(const AngularCoords& p);

// Real and imaginary parts of the closure identity, as residuals that vanish
// on exact arithmetic: (a sin beta - b sin alpha, 1 - a cos beta - b cos alpha).
std::array<double, 2> lift_closure_residuals(const AngularCoords& p);

// Residual a^2 - (1 + b^2 - 2 b cos alpha) of the cosine rule obtained by
// squaring the closure identity.
double cosine_rule_residual(const AngularCoords& p);

// Branch inverse built from the lift's imaginary parts: recovers
// (alpha, beta) = (v - pi, pi - u) and returns (log a, log b).
// Domain: 0 < u < pi, pi < v < 2 pi, v - u < pi; its Jacobian determinant
// is identically 1.
std::array<double, 2> g_tilde(double u, double v);

// Max-norm gap between the log-side map G and its conjugate
// N o g_tilde o (M p + (pi, pi)) with M = [[0, -1], [1, 0]], N = -I.
// Zero on exact arithmetic.
double verify_matrix_identity(const AngularCoords& p);

} // namespace baselgeo
