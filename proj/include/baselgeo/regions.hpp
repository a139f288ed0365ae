#pragma once

#include <cstdint>
#include <vector>

#include "baselgeo/triangle.hpp"

namespace baselgeo {

enum class Membership { Interior, Boundary, Outside };

// Subdivision label.  Boundary means within eps of a dividing line, where no
// piece can be assigned reliably; Outside means beyond the closed ambient
// region by more than eps.
enum class RegionLabel { Sub0, Sub1, Sub2, Boundary, Outside };

const char* to_string(Membership m);
const char* to_string(RegionLabel l);

// Membership in the open angular region {alpha > 0, beta > 0, alpha + beta < pi}.
Membership membership_T(double alpha, double beta, double eps = kBoundaryEps);

// Membership in the open side-length region {1 < a + b, a < 1 + b, b < 1 + a}.
Membership membership_S(double a, double b, double eps = kBoundaryEps);

// Membership in the log-side region: exponentiates and tests membership_S.
Membership membership_U(double x, double y, double eps = kBoundaryEps);

// Which median-bounded piece of the angular region holds p: Sub0 where gamma
// is the largest angle, Sub1 where alpha is, Sub2 where beta is.
RegionLabel classify_T(const AngularCoords& p, double eps = kBoundaryEps);

// Which asymptote-bounded piece of the log-side region holds r:
//   Sub0: x > 0, y > 0;  Sub1: x < 0, x < y;  Sub2: y < 0, y < x.
RegionLabel classify_U(const LogRadialCoords& r, double eps = kBoundaryEps);

// Sub0 -> Sub1 -> Sub2 -> Sub0; Boundary and Outside map to themselves.
RegionLabel successor(RegionLabel l);

// Order-3 unimodular relabeling of the log-side region: (x, y) -> (-y, x - y).
LogRadialCoords cyclic_map(const LogRadialCoords& r);

// Inverse relabeling: (x, y) -> (y - x, -x).
LogRadialCoords cyclic_map_inverse(const LogRadialCoords& r);

// Height of the boundary arc e^{-x} + e^{-y} = 1 above x > 0, i.e.
// -log(1 - e^{-x}).  Stable for all x > 0 (expm1/log1p split); DomainError
// for x <= 0.  Involution: applying it twice returns x.
double amoeba_boundary_height(double x);

// Area of the angular region: half of the pi-by-pi square.
double area_T_exact();

// Area of its Sub0 piece, by the shoelace rule over the four vertices
// (0,0), (pi/2,0), (pi/3,pi/3), (0,pi/2).
double area_T0_exact();

// Deterministic uniform samples of the angular region: unit-square points
// fold-reflected across the diagonal, scaled by pi.
std::vector<AngularCoords> sample_T(std::size_t count, std::uint64_t seed);

} // namespace baselgeo
