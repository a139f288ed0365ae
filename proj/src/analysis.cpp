#include "baselgeo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "baselgeo/errors.hpp"
#include "baselgeo/regions.hpp"
#include "baselgeo/rng.hpp"

namespace baselgeo {

namespace {

// Kronrod 15-point nodes on [-1, 1]; odd indices are the embedded Gauss-7 nodes.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,
};

struct Panel {
    double a, b, value, err;
};

struct PanelOrder {
    bool operator()(const Panel& l, const Panel& r) const { return l.err < r.err; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double pair = f(mid - dx) + f(mid + dx);
        resk += kWgk[i] * pair;
        if (i % 2 == 1) resg += kWg[i / 2] * pair;
    }
    return {a, b, resk * half, std::abs((resk - resg) * half)};
}

double kahan_add(double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    return sum;
}

double neg_log1m_over(double t) {
    return -std::log1p(-t) / t;
}

} // namespace

double fd_step(const std::array<double, 2>& p) {
    const double scale = std::max({std::abs(p[0]), std::abs(p[1]), 1.0});
    const double raw = scale * std::cbrt(std::numeric_limits<double>::epsilon());
    return std::exp2(std::round(std::log2(raw)));
}

double fd_jacobian_det(const PlanarMap& f, const std::array<double, 2>& p, double h) {
    if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
    // Fourth-order central stencil per axis: f'(x) ~ (-f2 + 8f1 - 8f_1 + f_2)/(12h).
    // Exact on affine maps when the offsets are representable; the h^4 bias
    // stays harmless even where the map's higher derivatives blow up.
    std::array<double, 2> probes[8];
    for (int axis = 0; axis < 2; ++axis) {
        for (int k = 0; k < 4; ++k) {
            static constexpr double kOffsets[4] = {2.0, 1.0, -1.0, -2.0};
            probes[4 * axis + k] = p;
            probes[4 * axis + k][axis] += kOffsets[k] * h;
        }
    }
    std::array<double, 2> values[8];
    for (int i = 0; i < 8; ++i) {
        try {
            values[i] = f(probes[i]);
        } catch (const std::domain_error& e) {
            throw EvaluationError(std::string("stencil corner left the map's domain: ") + e.what());
        }
        if (!std::isfinite(values[i][0]) || !std::isfinite(values[i][1])) {
            throw EvaluationError("map returned a non-finite value on the stencil");
        }
    }
    const double inv = 1.0 / (12.0 * h);
    const auto deriv = [&](int axis, int component) {
        const std::array<double, 2>* v = values + 4 * axis;
        return (-v[0][component] + 8.0 * v[1][component] -
                8.0 * v[2][component] + v[3][component]) * inv;
    };
    return Jacobian2{deriv(0, 0), deriv(1, 0), deriv(0, 1), deriv(1, 1)}.det();
}

double fd_jacobian_det(const PlanarMap& f, const std::array<double, 2>& p) {
    return fd_jacobian_det(f, p, fd_step(p));
}

NumericEstimate integrate_adaptive(const std::function<double(double)>& f,
                                   double a, double b, double rel_tol,
                                   std::uint64_t max_evals) {
    if (!(rel_tol > 0.0)) throw DomainError("relative tolerance must be positive");
    if (!(a <= b)) throw DomainError("integration bounds must be ordered");
    if (a == b) return {0.0, 0.0, 0};
    if (max_evals < 15) throw ToleranceNotMet("evaluation budget cannot fit one panel");

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    Panel first = eval_panel(f, a, b);
    std::uint64_t evals = 15;
    double value = first.value;
    double err = first.err;
    queue.push(first);

    while (err > rel_tol * std::abs(value)) {
        if (evals + 30 > max_evals) {
            throw ToleranceNotMet("evaluation budget exhausted before the tolerance was met");
        }
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = eval_panel(f, worst.a, mid);
        const Panel right = eval_panel(f, mid, worst.b);
        evals += 30;
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
    }
    return {value, err, evals};
}

double amoeba_tail_area(double cutoff) {
    if (!(cutoff > 0.0)) throw DomainError("tail cutoff must be positive");
    const double q = std::exp(-cutoff);
    double sum = 0.0;
    double comp = 0.0;
    double power = 1.0;
    for (std::uint64_t n = 1;; ++n) {
        power *= q;
        const double nd = static_cast<double>(n);
        const double term = power / (nd * nd);
        if (term < 1e-16) break;
        kahan_add(sum, comp, term);
    }
    return sum;
}

NumericEstimate integrate_boundary_tail(double cutoff, double rel_tol) {
    if (!(cutoff > 0.0)) throw DomainError("tail cutoff must be positive");
    return integrate_adaptive(neg_log1m_over, 0.0, std::exp(-cutoff), rel_tol);
}

NumericEstimate integrate_area_U0(double rel_tol) {
    if (!(rel_tol > 0.0) || !(rel_tol < 1.0)) {
        throw DomainError("relative tolerance must lie in (0, 1)");
    }
    return integrate_adaptive(neg_log1m_over, 0.0, 1.0, rel_tol);
}

NumericEstimate mc_area_U0(std::uint64_t samples, double box_side,
                           std::uint64_t seed, unsigned shards) {
    if (!(box_side > std::log(2.0))) {
        throw DomainError("box side must exceed log 2 so the box clears the arc corner");
    }
    if (samples < 1000) throw DomainError("at least 1000 samples are required");
    if (shards == 0 || shards > samples) {
        throw DomainError("shard count must satisfy 0 < shards <= samples");
    }

    const std::uint64_t base = samples / shards;
    const std::uint64_t extra = samples % shards;
    auto run_shard = [&](unsigned index) -> std::uint64_t {
        std::mt19937_64 eng(derive_stream_seed(seed, index));
        const std::uint64_t quota = base + (index < extra ? 1 : 0);
        std::uint64_t hit = 0;
        for (std::uint64_t i = 0; i < quota; ++i) {
            const std::uint64_t raw_x = eng();
            const std::uint64_t raw_y = eng();
            const double x = box_side * uniform01(raw_x);
            const double y = box_side * uniform01(raw_y);
            if (x == 0.0 || y < amoeba_boundary_height(x)) ++hit;
        }
        return hit;
    };

    std::uint64_t hits = 0;
    constexpr unsigned kMaxInflight = 32;
    for (unsigned first = 0; first < shards; first += kMaxInflight) {
        const unsigned last = std::min(shards, first + kMaxInflight);
        std::vector<std::future<std::uint64_t>> wave;
        wave.reserve(last - first);
        for (unsigned i = first; i < last; ++i) {
            wave.push_back(std::async(std::launch::async, run_shard, i));
        }
        for (auto& f : wave) hits += f.get();
    }

    const double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
    const double box_area = box_side * box_side;
    const double value = box_area * p_hat + 2.0 * amoeba_tail_area(box_side);
    const double stderr3 =
        3.0 * box_area * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
    return {value, stderr3, samples};
}

double spread_square_integral(std::uint64_t n) {
    if (n == 0) throw DomainError("strip index must be positive");
    const double nd = static_cast<double>(n);
    const double cut = 30.0 / nd;
    const NumericEstimate head = integrate_adaptive(
        [nd](double x) { return std::exp(-nd * x) / nd; }, 0.0, cut, 1e-13);
    const double tail = std::exp(-nd * cut) / (nd * nd);
    return head.value + tail;
}

std::array<double, 2> spread_square_bijection(std::uint64_t n, double x, double y) {
    if (n == 0) throw DomainError("strip index must be positive");
    if (!(x > 0.0)) throw DomainError("strip point needs x > 0");
    const double nd = static_cast<double>(n);
    const double ceiling = std::exp(-nd * x) / nd;
    if (!(y > 0.0) || !(y < ceiling)) {
        throw DomainError("strip point needs 0 < y < e^{-n x}/n");
    }
    return {-std::expm1(-nd * x) / nd, y * std::exp(nd * x)};
}

SeriesPartial log_series_partial(double t, std::uint64_t n_terms) {
    if (!(t > 0.0) || !(t < 1.0)) throw DomainError("series ratio must satisfy 0 < t < 1");
    if (n_terms == 0) throw DomainError("series needs at least one term");
    // Smallest terms first, uncompensated: the mild downward bias keeps the
    // partial sum at or below the library's rounding of -log1p(-t), so the
    // reported remainder never goes negative once the tail falls under one ulp.
    double sum = 0.0;
    for (std::uint64_t k = n_terms; k > 0; --k) {
        sum += std::pow(t, static_cast<double>(k)) / static_cast<double>(k);
    }
    const double tail_scale = std::pow(t, static_cast<double>(n_terms));
    return {n_terms, sum, tail_scale * -std::log1p(-t)};
}

double pile_height(double x, std::uint64_t n_terms) {
    if (!(x > 0.0)) throw DomainError("pile height needs x > 0");
    double t = std::exp(-x);
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) t = 1.0 - 0.5 * std::numeric_limits<double>::epsilon();
    return log_series_partial(t, n_terms).partial_sum;
}

std::uint64_t pile_covering_index(double a, double b, double c, double margin) {
    if (!(a > 0.0) || !(b > a) || !(c > 0.0) || !(margin >= 0.0)) {
        throw NotContained("box must satisfy 0 < a < b and c > 0 with margin >= 0");
    }
    const double clearance = amoeba_boundary_height(b) - c;
    if (!(clearance > margin)) {
        throw NotContained("box top does not clear the boundary arc by more than the margin");
    }
    for (std::uint64_t n = 1; n <= 10'000'000; ++n) {
        if (pile_height(b, n) > c) return n;
    }
    throw NotContained("covering index search exceeded its cap");
}

SeriesPartial zeta2_partial(std::uint64_t n_terms) {
    if (n_terms == 0) throw DomainError("series needs at least one term");
    double sum = 0.0;
    for (std::uint64_t k = n_terms; k > 0; --k) {
        const double kd = static_cast<double>(k);
        sum += 1.0 / (kd * kd);
    }
    return {n_terms, sum, 1.0 / static_cast<double>(n_terms)};
}

double harmonic_partial(std::uint64_t n_terms) {
    if (n_terms == 0) throw DomainError("series needs at least one term");
    double sum = 0.0;
    for (std::uint64_t k = n_terms; k > 0; --k) {
        sum += 1.0 / static_cast<double>(k);
    }
    return sum;
}

double dyadic_grouping_lower_bound(unsigned k) {
    if (k < 1 || k > 30) throw DomainError("group count must lie in [1, 30]");
    const double bound = 1.0 + 0.5 * static_cast<double>(k);
    if (!(bound <= harmonic_partial(std::uint64_t{1} << k))) {
        throw EvaluationError("dyadic lower bound failed its self-check");
    }
    return bound;
}

} // namespace baselgeo
