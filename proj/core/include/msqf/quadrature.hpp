#ifndef MSQF_QUADRATURE_HPP
#define MSQF_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace msqf {

/// Midpoint-in-log nodes t_j = t_min 2^{(j+1/2)/m}, j = 0..K-1 with
/// K = m log2(t_max/t_min), equal weights ln2/m for the measure dt/t.
/// Covers [t_min, t_max) as half-open log cells.
struct DyadicTGrid {
    double t_min = 0.0;
    double t_max = 0.0;
    int steps_per_octave = 0;
    std::vector<double> nodes;

    DyadicTGrid() = default;
    DyadicTGrid(double tmin, double tmax, int m);

    double weight() const { return std::log(2.0) / steps_per_octave; }
    int count() const { return static_cast<int>(nodes.size()); }

    /// Same range, doubled density (refinement gate).
    DyadicTGrid refined() const { return DyadicTGrid(t_min, t_max, 2 * steps_per_octave); }
    /// One extra octave on each side (truncation gate).
    DyadicTGrid widened() const { return DyadicTGrid(t_min / 2.0, t_max * 2.0, steps_per_octave); }
};

/// sum_j w_j samples_j: quadrature of integral f(t) dt/t over the grid range.
double log_quadrature(std::span<const double> samples, const DyadicTGrid& grid);

namespace detail {

struct TanhSinhNode {
    double x;   // abscissa measured from the left endpoint of [0,1]
    double w;   // weight (du factor included per level outside)
};

} // namespace detail

/// Tanh-sinh quadrature of f over [a, b]. Handles integrable endpoint
/// singularities; abscissae near a are delivered as exact offsets, so place
/// singularities at a (substitute first if needed). f may return double or
/// complex<double>.
template <typename Fn>
auto tanh_sinh(Fn&& f, double a, double b, double rel_tol = 1e-13, int max_level = 12)
    -> decltype(f(0.5)) {
    using R = decltype(f(0.5));
    const double hw = 0.5 * (b - a);
    constexpr double u_max = 6.56;   // weights below ~1e-17 beyond this
    const double pi_half = 1.5707963267948966;

    // Evaluate the mapped integrand at parameter u (both signs handled by caller).
    auto eval = [&](double u) -> R {
        const double s = pi_half * std::sinh(u);
        // 1 - tanh(s) = 2 e^{-2s} / (1 + e^{-2s}) for s > 0; symmetric otherwise.
        double x;
        if (s >= 0.0) {
            const double e = std::exp(-2.0 * s);
            const double delta = hw * 2.0 * e / (1.0 + e);          // distance to b
            if (delta == 0.0) return R{};
            x = b - delta;
        } else {
            const double e = std::exp(2.0 * s);
            const double delta = hw * 2.0 * e / (1.0 + e);          // distance to a
            if (delta == 0.0) return R{};
            x = a + delta;
        }
        const double sech2 = [&] {
            const double e = std::exp(-2.0 * std::abs(s));
            const double d = 1.0 + e;
            return 4.0 * e / (d * d);
        }();
        const double w = hw * pi_half * std::cosh(u) * sech2;
        if (w == 0.0 || !std::isfinite(w)) return R{};
        return f(x) * w;
    };

    double h = 1.0;
    R total = eval(0.0);
    {   // level 0: integer nodes
        for (int k = 1; k * h <= u_max; ++k) total += eval(k * h) + eval(-k * h);
        total *= h;
    }
    R prev = total;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        R add{};
        for (int k = 1; k * h <= u_max; k += 2) add += eval(k * h) + eval(-k * h);
        total = prev * 0.5 + add * h;
        if (level >= 3) {
            const double diff = std::abs(total - prev);
            if (diff <= rel_tol * std::abs(total) || diff == 0.0) return total;
        }
        prev = total;
    }
    return total;
}

/// Double-exponential quadrature of f over (0, infinity) via x = scale e^{(pi/2) sinh u}.
/// Suited to integrands with a power singularity at 0 and (super)exponential decay;
/// choose scale near the decay length.
template <typename Fn>
auto exp_sinh(Fn&& f, double scale = 1.0, double rel_tol = 1e-13, int max_level = 12)
    -> decltype(f(1.0)) {
    using R = decltype(f(1.0));
    constexpr double u_max = 6.2;
    const double pi_half = 1.5707963267948966;

    auto eval = [&](double u) -> R {
        const double s = pi_half * std::sinh(u);
        if (s > 700.0) return R{};
        const double x = scale * std::exp(s);
        const double w = x * pi_half * std::cosh(u);
        if (!std::isfinite(x) || !std::isfinite(w) || x == 0.0) return R{};
        return f(x) * w;
    };

    double h = 1.0;
    R total = eval(0.0);
    for (int k = 1; k * h <= u_max; ++k) total += eval(k * h) + eval(-k * h);
    total *= h;
    R prev = total;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        R add{};
        for (int k = 1; k * h <= u_max; k += 2) add += eval(k * h) + eval(-k * h);
        total = prev * 0.5 + add * h;
        if (level >= 3) {
            const double diff = std::abs(total - prev);
            if (diff <= rel_tol * std::abs(total) || diff == 0.0) return total;
        }
        prev = total;
    }
    return total;
}

} // namespace msqf

#endif
