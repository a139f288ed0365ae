#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "baselgeo/errors.hpp"
#include "baselgeo/regions.hpp"
#include "baselgeo/triangle.hpp"

using namespace baselgeo;

namespace {

constexpr double pi = std::numbers::pi;

// Independent oracle: the cosine rule a^2 = 1 + b^2 - 2b cos(alpha) ties the
// output sides back to the input angles without reusing the forward formulas.
double cosine_rule_gap(const AngularCoords& p, const RadialCoords& q) {
    return std::abs(q.a * q.a - (1.0 + q.b * q.b - 2.0 * q.b * std::cos(p.alpha)));
}

// Sine rule against the unit base: a sin(gamma) = sin(alpha).
double sine_rule_gap(const AngularCoords& p, const RadialCoords& q) {
    return std::abs(q.a * std::sin(p.gamma()) - std::sin(p.alpha));
}

} // namespace

TEST_CASE("coordinate constructors accept the closed regions up to tolerance") {
    CHECK_NOTHROW(AngularCoords(0.0, 0.5));
    CHECK_NOTHROW(AngularCoords(-1e-10, 0.5));
    CHECK_NOTHROW(AngularCoords(1.0, pi - 1.0));
    CHECK_THROWS_AS(AngularCoords(-1e-8, 0.5), DomainError);
    CHECK_THROWS_AS(AngularCoords(2.0, 2.0), DomainError);
    CHECK_THROWS_AS(AngularCoords(std::nan(""), 0.5), DomainError);

    CHECK_NOTHROW(RadialCoords(1.0, 1.0));
    CHECK_NOTHROW(RadialCoords(0.5, 0.5)); // degenerate: a + b = 1
    CHECK_THROWS_AS(RadialCoords(0.2, 0.2), DomainError);
    CHECK_THROWS_AS(RadialCoords(3.0, 1.0), DomainError);
    CHECK_THROWS_AS(RadialCoords(1.0, 3.0), DomainError);
    CHECK_THROWS_AS(RadialCoords(-1.0, 1.0), DomainError);

    CHECK_NOTHROW(LogRadialCoords(0.0, 0.0));
    CHECK_NOTHROW(LogRadialCoords(20.0, 1e-9)); // deep in a tentacle
    CHECK_THROWS_AS(LogRadialCoords(5.0, 5.0), DomainError);
}

TEST_CASE("domain errors name the violated inequality") {
    try {
        RadialCoords(3.0, 1.0);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("A < 1 + B") != std::string::npos);
    }
    try {
        RadialCoords(0.2, 0.2);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("1 < A + B") != std::string::npos);
    }
}

TEST_CASE("angles_to_sides reproduces the classical triangles") {
    const RadialCoords eq = angles_to_sides({pi / 3, pi / 3});
    CHECK(std::abs(eq.a - 1.0) < 1e-15);
    CHECK(std::abs(eq.b - 1.0) < 1e-15);

    const RadialCoords ri = angles_to_sides({pi / 2, pi / 4});
    CHECK(std::abs(ri.a - std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(ri.b - 1.0) < 1e-15);
}

TEST_CASE("angles_to_sides satisfies the sine and cosine rules") {
    for (const AngularCoords& p : sample_T(500, 20260816)) {
        if (margin_T(p.alpha, p.beta) < 1e-3) continue;
        const RadialCoords q = angles_to_sides(p);
        const double scale = std::max(1.0, q.a * q.a + q.b * q.b);
        CHECK(cosine_rule_gap(p, q) < 1e-13 * scale);
        CHECK(sine_rule_gap(p, q) < 1e-13 * std::max(1.0, q.a));
    }
}

TEST_CASE("angles_to_sides rejects boundary points") {
    CHECK_THROWS_AS(angles_to_sides(AngularCoords(0.0, 0.5)), DomainError);
    CHECK_THROWS_AS(angles_to_sides(AngularCoords(0.5, 0.0)), DomainError);
    CHECK_THROWS_AS(angles_to_sides(AngularCoords(1.0, pi - 1.0)), DomainError);
}

TEST_CASE("swapping the angles swaps the sides exactly") {
    for (const AngularCoords& p : sample_T(200, 7)) {
        if (margin_T(p.alpha, p.beta) < 1e-6) continue;
        const RadialCoords q = angles_to_sides(p);
        const RadialCoords w = angles_to_sides({p.beta, p.alpha});
        CHECK(q.a == w.b);
        CHECK(q.b == w.a);
        const LogRadialCoords r = angles_to_log_sides(p);
        const LogRadialCoords m = angles_to_log_sides({p.beta, p.alpha});
        CHECK(r.x == m.y);
        CHECK(r.y == m.x);
    }
}

TEST_CASE("sides_to_angles reproduces the classical triangles") {
    const AngularCoords eq = sides_to_angles({1.0, 1.0});
    CHECK(std::abs(eq.alpha - pi / 3) < 1e-15);
    CHECK(std::abs(eq.beta - pi / 3) < 1e-15);

    const AngularCoords ri = sides_to_angles({std::numbers::sqrt2, 1.0});
    CHECK(std::abs(ri.alpha - pi / 2) < 1e-14);
    CHECK(std::abs(ri.beta - pi / 4) < 1e-14);
}

TEST_CASE("sides_to_angles roundtrips angles_to_sides within 1e-9") {
    for (const AngularCoords& p : sample_T(10'000, 42)) {
        if (margin_T(p.alpha, p.beta) < 2e-9) continue;
        const AngularCoords back = sides_to_angles(angles_to_sides(p));
        CHECK(std::abs(back.alpha - p.alpha) < 1e-9);
        CHECK(std::abs(back.beta - p.beta) < 1e-9);
    }
}

TEST_CASE("near-degenerate sides clamp to zero angles inside the window") {
    // a + b just below 1 pushes the acos argument past 1 by ~5e-13: clamped.
    const AngularCoords p = sides_to_angles({0.5 - 2.5e-13, 0.5 - 2.5e-13});
    CHECK(p.alpha == 0.0);
    CHECK(p.beta == 0.0);

    // A violation of ~1e-11 exceeds the clamp window but not the membership
    // tolerance: ClampError, not DomainError.
    CHECK_THROWS_AS(sides_to_angles(RadialCoords(0.5 - 5e-12, 0.5 - 5e-12)), ClampError);
}

TEST_CASE("angles_to_log_sides hits the known asymptote values") {
    const LogRadialCoords eq = angles_to_log_sides({pi / 3, pi / 3});
    CHECK(std::abs(eq.x) < 1e-15);
    CHECK(std::abs(eq.y) < 1e-15);

    const LogRadialCoords ri = angles_to_log_sides({pi / 2, pi / 4});
    CHECK(std::abs(ri.x + 0.5 * std::log(2.0)) < 1e-15);
    CHECK(std::abs(ri.y) < 1e-15);
}

TEST_CASE("angles_to_log_sides maps medians to asymptotes") {
    for (int i = 1; i <= 40; ++i) {
        const double s = i / 41.0;

        // alpha = beta lands on x = y, bitwise by symmetry.
        const double d = 0.05 + s * (pi / 2 - 0.1);
        const LogRadialCoords diag = angles_to_log_sides({d, d});
        CHECK(diag.x == diag.y);

        // 2 alpha + beta = pi lands on x = 0.
        const double a1 = 0.1 + s * 1.3;
        const LogRadialCoords med1 = angles_to_log_sides({a1, pi - 2 * a1});
        CHECK(std::abs(med1.x) < 1e-12);

        // alpha + 2 beta = pi lands on y = 0.
        const LogRadialCoords med2 = angles_to_log_sides({pi - 2 * a1, a1});
        CHECK(std::abs(med2.y) < 1e-12);
    }
}

TEST_CASE("log_sides_to_angles inverts the known points") {
    const AngularCoords eq = log_sides_to_angles({0.0, 0.0});
    CHECK(std::abs(eq.alpha - pi / 3) < 1e-15);
    CHECK(std::abs(eq.beta - pi / 3) < 1e-15);

    const AngularCoords ri = log_sides_to_angles({-0.5 * std::log(2.0), 0.0});
    CHECK(std::abs(ri.alpha - pi / 2) < 1e-14);
    CHECK(std::abs(ri.beta - pi / 4) < 1e-14);

    CHECK_THROWS_AS(log_sides_to_angles(LogRadialCoords(5.0, 5.0, 100.0)), DomainError);
}

TEST_CASE("log-side roundtrips hold within 1e-9 on both sides") {
    std::size_t used = 0;
    for (const AngularCoords& p : sample_T(10'000, 271828)) {
        if (margin_T(p.alpha, p.beta) < 2e-9) continue;
        const LogRadialCoords r = angles_to_log_sides(p);
        const AngularCoords back = log_sides_to_angles(r);
        CHECK(std::abs(back.alpha - p.alpha) < 1e-9);
        CHECK(std::abs(back.beta - p.beta) < 1e-9);

        // Forward roundtrip on the log-side region, restricted to its first
        // quadrant piece where both coordinates are positive.
        if (classify_U(r) == RegionLabel::Sub0) {
            const LogRadialCoords again = angles_to_log_sides(back);
            CHECK(std::abs(again.x - r.x) < 1e-9);
            CHECK(std::abs(again.y - r.y) < 1e-9);
            ++used;
        }
    }
    CHECK(used > 2000);
}

TEST_CASE("analytic Jacobian matches hand-computed entries") {
    // Equilateral: cot(2 pi/3) = -1/sqrt(3), cot(pi/3) = 1/sqrt(3).
    const double c = 1.0 / std::sqrt(3.0);
    const Jacobian2 J = jacobian_G_analytic({pi / 3, pi / 3});
    CHECK(std::abs(J.a + 2 * c) < 1e-14);
    CHECK(std::abs(J.b + c) < 1e-14);
    CHECK(std::abs(J.c + c) < 1e-14);
    CHECK(std::abs(J.d + 2 * c) < 1e-14);
    CHECK(std::abs(J.det() - 1.0) < 1e-14);

    // Right isosceles: cot(3 pi/4) = -1, cot(pi/2) = 0, cot(pi/4) = 1.
    const Jacobian2 K = jacobian_G_analytic({pi / 2, pi / 4});
    CHECK(std::abs(K.a + 1.0) < 1e-14);
    CHECK(std::abs(K.b + 1.0) < 1e-14);
    CHECK(std::abs(K.c + 1.0) < 1e-14);
    CHECK(std::abs(K.d + 2.0) < 1e-14);
    CHECK(std::abs(K.det() - 1.0) < 1e-15);
}

TEST_CASE("analytic Jacobian determinant is 1 away from the boundary") {
    for (const AngularCoords& p : sample_T(2000, 99)) {
        if (margin_T(p.alpha, p.beta) < 0.1) continue;
        CHECK(std::abs(jacobian_G_analytic(p).det() - 1.0) < 1e-12);

        // The cotangent addition identity, expanded by hand.
        const double cs = std::cos(p.alpha + p.beta) / std::sin(p.alpha + p.beta);
        const double ca = std::cos(p.alpha) / std::sin(p.alpha);
        const double cb = std::cos(p.beta) / std::sin(p.beta);
        CHECK(std::abs(-cs * (ca + cb) + ca * cb - 1.0) < 1e-12);
    }
}

TEST_CASE("analytic Jacobian rejects boundary points") {
    CHECK_THROWS_AS(jacobian_G_analytic(AngularCoords(pi / 2, pi / 2)), DomainError);
    CHECK_THROWS_AS(jacobian_G_analytic(AngularCoords(0.0, 1.0)), DomainError);
}

TEST_CASE("Jacobian2 determinant is compensated against cancellation") {
    CHECK(Jacobian2{2, 3, 5, 7}.det() == -1.0);

    // (1 + 2^-27)^2 - 1 = 2^-26 + 2^-54 exactly; a naive product would
    // round the square and lose the low bit.
    const double u = 1.0 + std::exp2(-27);
    const Jacobian2 J{u, 1.0, 1.0, u};
    CHECK(J.det() == std::exp2(-26) + std::exp2(-54));
}

TEST_CASE("margin_T measures the slack against all three edges") {
    CHECK(margin_T(pi / 4, pi / 4) == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(margin_T(-0.1, 0.2) == doctest::Approx(-0.1).epsilon(1e-15));
    CHECK(margin_T(pi / 2, pi / 2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(margin_T(0.3, 0.2) == doctest::Approx(0.2).epsilon(1e-15));
}
