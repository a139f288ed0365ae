#include "baselgeo/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "baselgeo/errors.hpp"

namespace baselgeo {

namespace {

constexpr double pi = std::numbers::pi;

// Shared by both side-length constructors so the two coordinate charts agree
// on what the closed region is and how violations are reported.
void require_sides(double a, double b, double tol) {
    if (!(a >= -tol) || !(b >= -tol)) {
        throw DomainError("side lengths must satisfy A > 0 and B > 0");
    }
    if (!(a + b >= 1.0 - tol)) {
        throw DomainError("triangle inequality violated: 1 < A + B");
    }
    if (!(a <= 1.0 + b + tol)) {
        throw DomainError("triangle inequality violated: A < 1 + B");
    }
    if (!(b <= 1.0 + a + tol)) {
        throw DomainError("triangle inequality violated: B < 1 + A");
    }
}

// Boundary tolerance scaled to the side lengths: near-degenerate triangles
// have sides ~1/margin, where the inequalities cannot be decided to 1e-9.
double side_scale_tol(double a, double b) {
    return kBoundaryEps * std::max(1.0, std::abs(a) + std::abs(b));
}

void require_interior(const AngularCoords& p) {
    if (!(margin_T(p.alpha, p.beta) >= kBoundaryEps)) {
        throw DomainError("angles must lie strictly inside the angular region");
    }
}

// Twice the area of the triangle with sides (a, b, 1), by the Heron form
// with factors grouped around the sorted sides; relatively accurate even for
// needles.  Degenerate inputs can round the radicand negative: zero area.
double twice_area(double a, double b) {
    double p = a, q = b, r = 1.0;
    if (p < q) std::swap(p, q);
    if (q < r) std::swap(q, r);
    if (p < q) std::swap(p, q);
    const double radicand =
        (p + (q + r)) * (r - (p - q)) * (r + (p - q)) * (p + (q - r));
    return radicand <= 0.0 ? 0.0 : 0.5 * std::sqrt(radicand);
}

// Arguments may leave [-1, 1] by rounding of the cosine-rule quotient; the
// window bounds how much of that is attributable to roundoff.
double clamp_acos_arg(double t) {
    if (t > 1.0) {
        if (!(t - 1.0 <= kAcosClampWindow)) {
            throw ClampError("inverse-cosine argument exceeds 1 beyond the clamp window");
        }
        return 1.0;
    }
    if (t < -1.0) {
        if (!(-1.0 - t <= kAcosClampWindow)) {
            throw ClampError("inverse-cosine argument is below -1 beyond the clamp window");
        }
        return -1.0;
    }
    if (std::isnan(t)) {
        throw ClampError("inverse-cosine argument is not a number");
    }
    return t;
}

} // namespace

AngularCoords::AngularCoords(double alpha, double beta, double boundary_tol)
    : alpha(alpha), beta(beta) {
    if (!(alpha >= -boundary_tol) || !(beta >= -boundary_tol) ||
        !(alpha + beta <= pi + boundary_tol)) {
        throw DomainError("angles outside the closed region alpha >= 0, beta >= 0, alpha + beta <= pi");
    }
}

RadialCoords::RadialCoords(double a, double b, double boundary_tol) : a(a), b(b) {
    require_sides(a, b, boundary_tol);
}

LogRadialCoords::LogRadialCoords(double x, double y, double boundary_tol) : x(x), y(y) {
    require_sides(std::exp(-x), std::exp(-y), boundary_tol);
}

double Jacobian2::det() const {
    // Kahan's compensated 2x2 determinant: exact products via fma.
    const double w = b * c;
    const double e = std::fma(b, c, -w);
    const double f = std::fma(a, d, -w);
    return f - e;
}

double margin_T(double alpha, double beta) {
    return std::min({alpha, beta, pi - alpha - beta});
}

RadialCoords angles_to_sides(const AngularCoords& p) {
    require_interior(p);
    const double s = std::sin(p.alpha + p.beta);
    const double a = std::sin(p.alpha) / s;
    const double b = std::sin(p.beta) / s;
    return RadialCoords(a, b, side_scale_tol(a, b));
}

AngularCoords sides_to_angles(const RadialCoords& q) {
    const double za = clamp_acos_arg((1.0 - q.a * q.a + q.b * q.b) / (2.0 * q.b));
    const double zb = clamp_acos_arg((1.0 + q.a * q.a - q.b * q.b) / (2.0 * q.a));
    // acos loses eps/sin(angle) of absolute accuracy where its argument
    // crowds 1; below 60 degrees the sine route keeps the angle relatively
    // accurate instead.  sin(alpha) = 2 * Area / (b * 1), and likewise beta.
    const double sines = twice_area(q.a, q.b);
    const double alpha =
        za >= 0.5 ? std::asin(std::min(1.0, sines / q.b)) : std::acos(za);
    const double beta =
        zb >= 0.5 ? std::asin(std::min(1.0, sines / q.a)) : std::acos(zb);
    return AngularCoords(alpha, beta);
}

LogRadialCoords angles_to_log_sides(const AngularCoords& p) {
    require_interior(p);
    const double s = std::sin(p.alpha + p.beta);
    const double x = std::log(s / std::sin(p.alpha));
    const double y = std::log(s / std::sin(p.beta));
    return LogRadialCoords(x, y, side_scale_tol(std::exp(-x), std::exp(-y)));
}

AngularCoords log_sides_to_angles(const LogRadialCoords& r) {
    const double a = std::exp(-r.x);
    const double b = std::exp(-r.y);
    return sides_to_angles(RadialCoords(a, b, side_scale_tol(a, b)));
}

Jacobian2 jacobian_G_analytic(const AngularCoords& p) {
    require_interior(p);
    const double g = p.alpha + p.beta;
    const double cs = std::cos(g) / std::sin(g);
    const double ca = std::cos(p.alpha) / std::sin(p.alpha);
    const double cb = std::cos(p.beta) / std::sin(p.beta);
    return {cs - ca, cs, cs, cs - cb};
}

} // namespace baselgeo
