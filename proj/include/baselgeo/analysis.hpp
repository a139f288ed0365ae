#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace baselgeo {

// Value with a claimed error bound and the evaluation count spent on it.
struct NumericEstimate {
    double value;
    double error_bound;
    std::uint64_t work;
};

// Partial sum with an analytic bound on the dropped remainder.
struct SeriesPartial {
    std::uint64_t n_terms;
    double partial_sum;
    double remainder_bound;
};

using PlanarMap = std::function<std::array<double, 2>(std::array<double, 2>)>;

// Default central-difference step: max(|p|_inf, 1) * cbrt(machine epsilon),
// rounded to a power of two so the stencil offsets add exactly.
double fd_step(const std::array<double, 2>& p);

// Jacobian determinant of f at p by fourth-order central differences with
// step h.  EvaluationError if a stencil corner leaves f's domain or f
// returns a non-finite value; DomainError for h <= 0.
double fd_jacobian_det(const PlanarMap& f, const std::array<double, 2>& p, double h);
double fd_jacobian_det(const PlanarMap& f, const std::array<double, 2>& p);

// Globally adaptive Gauss-Kronrod 7/15 on [a, b], splitting the worst
// interval first, until the summed |K15 - G7| falls below rel_tol * |value|.
// ToleranceNotMet if max_evals runs out first.
NumericEstimate integrate_adaptive(const std::function<double(double)>& f,
                                   double a, double b, double rel_tol,
                                   std::uint64_t max_evals = 2'000'000);

// Tail of the boundary-height area past x = cutoff: sum_{n>=1} e^{-n cutoff}/n^2,
// truncated once a term drops below 1e-16.
double amoeba_tail_area(double cutoff);

// Same tail by quadrature (t = e^{-x} turns it into -log(1-t)/t on (0, e^{-cutoff}]).
NumericEstimate integrate_boundary_tail(double cutoff, double rel_tol);

// Area under the boundary arc over x > 0: the substitution t = e^{-x} turns
// it into the finite integral of -log(1-t)/t over (0, 1], evaluated by one
// adaptive quadrature with no series assistance.
// DomainError unless 0 < rel_tol < 1.
NumericEstimate integrate_area_U0(double rel_tol);

// Rejection Monte Carlo for the same area on [0, L]^2, plus two exact
// tentacle tails past L.  error_bound is 3 binomial standard errors scaled
// by L^2.  Shards are independent substreams of the seed; the merged result
// depends only on (samples, box_side, seed, shards), not on scheduling.
// DomainError unless box_side > log 2 and 1000 <= samples and
// 0 < shards <= samples.
NumericEstimate mc_area_U0(std::uint64_t samples, double box_side,
                           std::uint64_t seed, unsigned shards = 1);

// integral_0^inf e^{-n x}/n dx by adaptive quadrature plus an exact
// exponential tail; equals 1/n^2 within 1e-12.
double spread_square_integral(std::uint64_t n);

// Area-preserving squeeze of the strip under e^{-n x}/n onto a square:
// (x, y) -> ((1 - e^{-n x})/n, y e^{n x}).  DomainError unless x > 0 and
// 0 < y < e^{-n x}/n.
std::array<double, 2> spread_square_bijection(std::uint64_t n, double x, double y);

// sum_{k=1..N} t^k/k with remainder bound -t^N log(1 - t).
// DomainError unless 0 < t < 1 and N >= 1.
SeriesPartial log_series_partial(double t, std::uint64_t n_terms);

// Partial sums of the boundary height: log_series_partial at t = e^{-x}.
double pile_height(double x, std::uint64_t n_terms);

// Smallest N whose pile covers the box [a, b] x [0, c].  The pile decreases
// in x, so the right edge binds.  NotContained if the box is malformed or
// its clearance under the boundary at x = b is not more than `margin`.
std::uint64_t pile_covering_index(double a, double b, double c, double margin);

// sum_{k=1..N} 1/k^2, summed smallest-first, with remainder bound 1/N.
// The partial sum stays below 2 - 1/N for N >= 2.
SeriesPartial zeta2_partial(std::uint64_t n_terms);

// sum_{k=1..N} 1/k, summed smallest-first; always exceeds log(1 + N).
double harmonic_partial(std::uint64_t n_terms);

// Lower bound 1 + k/2 on the first 2^k harmonic terms, by dyadic grouping.
// Verifies the bound against harmonic_partial before returning it; equality
// holds at k = 1, strict above.
double dyadic_grouping_lower_bound(unsigned k);

} // namespace baselgeo
