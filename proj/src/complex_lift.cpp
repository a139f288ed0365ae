#include "baselgeo/complex_lift.hpp"

#include <cmath>
#include <numbers>

#include "baselgeo/errors.hpp"

namespace baselgeo {

namespace {
constexpr double pi = std::numbers::pi;
}

LiftPoint::LiftPoint(std::complex<double> s, std::complex<double> t) : s(s), t(t) {
    const double gap = std::abs(1.0 + std::exp(s) + std::exp(t));
    if (!(gap < 1e-10)) {
        throw DomainError("lifted edges do not close the unit base");
    }
}

LiftPoint lift_from_angles(const AngularCoords& p) {
    const RadialCoords q = angles_to_sides(p);
    return {{std::log(q.a), pi - p.beta}, {std::log(q.b), pi + p.alpha}};
}

std::array<double, 2> lift_closure_residuals(const AngularCoords& p) {
    const RadialCoords q = angles_to_sides(p);
    return {q.a * std::sin(p.beta) - q.b * std::sin(p.alpha),
            1.0 - q.a * std::cos(p.beta) - q.b * std::cos(p.alpha)};
}

double cosine_rule_residual(const AngularCoords& p) {
    const RadialCoords q = angles_to_sides(p);
    return q.a * q.a - (1.0 + q.b * q.b - 2.0 * q.b * std::cos(p.alpha));
}

std::array<double, 2> g_tilde(double u, double v) {
    if (!(u > 0.0) || !(u < pi)) throw DomainError("branch needs 0 < u < pi");
    if (!(v > pi) || !(v < 2.0 * pi)) throw DomainError("branch needs pi < v < 2 pi");
    if (!(v - u < pi)) throw DomainError("branch needs v - u < pi");
    const double alpha = v - pi;
    const double beta = pi - u;
    const double s = std::sin(alpha + beta);
    return {std::log(std::sin(alpha) / s), std::log(std::sin(beta) / s)};
}

double verify_matrix_identity(const AngularCoords& p) {
    const LogRadialCoords g = angles_to_log_sides(p);
    // M (alpha, beta) + (pi, pi) with M = [[0, -1], [1, 0]].
    const auto w = g_tilde(pi - p.beta, pi + p.alpha);
    return std::max(std::abs(g.x + w[0]), std::abs(g.y + w[1]));
}

} // namespace baselgeo
