#include "baselgeo/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "baselgeo/errors.hpp"
#include "baselgeo/rng.hpp"

namespace baselgeo {

namespace {

constexpr double pi = std::numbers::pi;

Membership from_margin(double margin, double eps) {
    if (margin > eps) return Membership::Interior;
    if (margin < -eps) return Membership::Outside;
    return Membership::Boundary;
}

// Loose construction tolerance for images of the relabeling maps: rounding in
// x - y perturbs the side-length slacks by roughly exp(-x) + exp(-y) ulps.
double log_side_tol(double x, double y) {
    return kBoundaryEps * std::max(1.0, std::exp(-x) + std::exp(-y));
}

} // namespace

const char* to_string(Membership m) {
    switch (m) {
    case Membership::Interior: return "Interior";
    case Membership::Boundary: return "Boundary";
    case Membership::Outside: return "Outside";
    }
    return "Outside";
}

const char* to_string(RegionLabel l) {
    switch (l) {
    case RegionLabel::Sub0: return "Sub0";
    case RegionLabel::Sub1: return "Sub1";
    case RegionLabel::Sub2: return "Sub2";
    case RegionLabel::Boundary: return "Boundary";
    case RegionLabel::Outside: return "Outside";
    }
    return "Outside";
}

Membership membership_T(double alpha, double beta, double eps) {
    return from_margin(margin_T(alpha, beta), eps);
}

Membership membership_S(double a, double b, double eps) {
    const double margin = std::min({a + b - 1.0, 1.0 + b - a, 1.0 + a - b});
    return from_margin(margin, eps);
}

Membership membership_U(double x, double y, double eps) {
    return membership_S(std::exp(-x), std::exp(-y), eps);
}

RegionLabel classify_T(const AngularCoords& p, double eps) {
    switch (membership_T(p.alpha, p.beta, eps)) {
    case Membership::Outside: return RegionLabel::Outside;
    case Membership::Boundary: return RegionLabel::Boundary;
    case Membership::Interior: break;
    }
    const double gamma = pi - p.alpha - p.beta;
    if (gamma - p.alpha > eps && gamma - p.beta > eps) return RegionLabel::Sub0;
    if (p.alpha - gamma > eps && p.alpha - p.beta > eps) return RegionLabel::Sub1;
    if (p.beta - gamma > eps && p.beta - p.alpha > eps) return RegionLabel::Sub2;
    // The two largest angles tie: p sits on a median.
    return RegionLabel::Boundary;
}

RegionLabel classify_U(const LogRadialCoords& r, double eps) {
    switch (membership_U(r.x, r.y, eps)) {
    case Membership::Outside: return RegionLabel::Outside;
    case Membership::Boundary: return RegionLabel::Boundary;
    case Membership::Interior: break;
    }
    if (r.x > eps && r.y > eps) return RegionLabel::Sub0;
    if (r.x < -eps && r.y - r.x > eps) return RegionLabel::Sub1;
    if (r.y < -eps && r.x - r.y > eps) return RegionLabel::Sub2;
    return RegionLabel::Boundary;
}

RegionLabel successor(RegionLabel l) {
    switch (l) {
    case RegionLabel::Sub0: return RegionLabel::Sub1;
    case RegionLabel::Sub1: return RegionLabel::Sub2;
    case RegionLabel::Sub2: return RegionLabel::Sub0;
    case RegionLabel::Boundary: return RegionLabel::Boundary;
    case RegionLabel::Outside: return RegionLabel::Outside;
    }
    return RegionLabel::Outside;
}

LogRadialCoords cyclic_map(const LogRadialCoords& r) {
    const double x = -r.y;
    const double y = r.x - r.y;
    return LogRadialCoords(x, y, log_side_tol(x, y));
}

LogRadialCoords cyclic_map_inverse(const LogRadialCoords& r) {
    const double x = r.y - r.x;
    const double y = -r.x;
    return LogRadialCoords(x, y, log_side_tol(x, y));
}

double amoeba_boundary_height(double x) {
    if (!(x > 0.0)) throw DomainError("boundary height needs x > 0");
    if (x < 0.5) return -std::log(-std::expm1(-x));
    return -std::log1p(-std::exp(-x));
}

double area_T_exact() {
    return pi * pi / 2.0;
}

double area_T0_exact() {
    const double vx[] = {0.0, pi / 2.0, pi / 3.0, 0.0};
    const double vy[] = {0.0, 0.0, pi / 3.0, pi / 2.0};
    double twice = 0.0;
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        twice += Jacobian2{vx[i], vx[j], vy[i], vy[j]}.det();
    }
    return 0.5 * twice;
}

std::vector<AngularCoords> sample_T(std::size_t count, std::uint64_t seed) {
    std::vector<AngularCoords> out;
    out.reserve(count);
    std::mt19937_64 eng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        double u = uniform01(eng());
        double v = uniform01(eng());
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        out.emplace_back(pi * u, pi * v);
    }
    return out;
}

} // namespace baselgeo
