#pragma once

#include <numbers>

namespace baselgeo {

// Shared tolerance for boundary decisions, in the native units of each region.
inline constexpr double kBoundaryEps = 1e-9;

// How far beyond [-1, 1] an inverse-cosine argument may stray and still be clamped.
inline constexpr double kAcosClampWindow = 1e-12;

// Interior angles (alpha, beta) of a triangle with base 1, in radians.
// Construction accepts the closed region alpha >= 0, beta >= 0,
// alpha + beta <= pi, up to boundary_tol; DomainError beyond it.
struct AngularCoords {
    double alpha;
    double beta;

    AngularCoords(double alpha, double beta, double boundary_tol = kBoundaryEps);

    double gamma() const { return std::numbers::pi - alpha - beta; }
};

// Side lengths (a, b) opposite (alpha, beta), for base 1.  Construction
// accepts the closed region a, b > 0 with 1 < a + b, a < 1 + b, b < 1 + a,
// up to boundary_tol; DomainError names the violated inequality.
struct RadialCoords {
    double a;
    double b;

    RadialCoords(double a, double b, double boundary_tol = kBoundaryEps);
};

// Log side coordinates (x, y) = (-log a, -log b).  Membership is checked by
// exponentiating back to side lengths.
struct LogRadialCoords {
    double x;
    double y;

    LogRadialCoords(double x, double y, double boundary_tol = kBoundaryEps);
};

// Row-major 2x2 derivative [[a, b], [c, d]].
struct Jacobian2 {
    double a, b, c, d;

    // ad - bc, compensated with fma; faithful to the stored entries.
    double det() const;
};

// Smallest slack of (alpha, beta) against the three edges of the angular
// region: min(alpha, beta, pi - alpha - beta).  Negative outside.
double margin_T(double alpha, double beta);

// F: angles to sides, (sin alpha / sin(alpha+beta), sin beta / sin(alpha+beta)).
// Requires an interior point; DomainError within kBoundaryEps of the boundary.
RadialCoords angles_to_sides(const AngularCoords& p);

// F^-1 via the cosine rule:
//   alpha = acos((1 - a^2 + b^2) / (2b)),  beta = acos((1 + a^2 - b^2) / (2a)).
// Arguments to acos are clamped within kAcosClampWindow; ClampError beyond.
// Angles whose cosine exceeds 1/2 are recovered from their sine instead,
// which stays relatively accurate down to degeneracy.
AngularCoords sides_to_angles(const RadialCoords& q);

// G: angles to log sides,
//   (log(sin(alpha+beta)/sin alpha), log(sin(alpha+beta)/sin beta)).
// Requires an interior point, like angles_to_sides.
LogRadialCoords angles_to_log_sides(const AngularCoords& p);

// G^-1: exponentiate, then invert via the cosine rule.
AngularCoords log_sides_to_angles(const LogRadialCoords& r);

// Derivative of G at p:
//   [[cot(alpha+beta) - cot alpha, cot(alpha+beta)],
//    [cot(alpha+beta), cot(alpha+beta) - cot beta]].
// Its determinant is identically 1; with double entries the computed value
// drifts from 1 by ~eps * cot^2 near the boundary, where cotangents diverge.
Jacobian2 jacobian_G_analytic(const AngularCoords& p);

} // namespace baselgeo
