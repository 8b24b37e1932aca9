#include "doctest.h"

#include "msqf/families.hpp"
#include "msqf/fft.hpp"
#include "msqf/kernels.hpp"
#include "msqf/square_functions.hpp"
#include "msqf/transforms.hpp"

#include <cmath>
#include <numbers>

using namespace msqf;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

const GridSpec kGrid(1, 16.0, 1024);

SampledField gauss_deriv(const GridSpec& g, double sigma = 1.0, double c = 0.0) {
    SampledField f = SampledField::zeros(g);
    for (int m = 0; m < g.points_per_axis; ++m) {
        const double u = (g.coord(m) - c) / sigma;
        f.at(m) = -kTwoPi * u / sigma * std::exp(-kPi * u * u);
    }
    return f;
}

double rel_max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double scale = 0.0;
    for (double v : b) scale = std::max(scale, std::abs(v));
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        w = std::max(w, std::abs(a[i] - b[i]) / std::max(std::abs(b[i]), 1e-6 * scale));
    return w;
}
} // namespace

TEST_CASE("config defaults and validation") {
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid);
    CHECK(cfg.points.size() == 33);
    CHECK(cfg.t_grid.t_min == doctest::Approx(std::exp2(-8)));
    CHECK(cfg.t_grid.t_max == doctest::Approx(std::exp2(8)));
    CHECK(cfg.t_grid.steps_per_octave >= 8);
    for (const auto& p : cfg.points) {
        const double x = kGrid.coord(p[0]);
        CHECK(x >= -kGrid.half_width / 2.0);
        CHECK(x < kGrid.half_width / 2.0);
    }
    GridSpec g2(2, 8.0, 128);
    SquareFunctionConfig cfg2 = SquareFunctionConfig::defaults(g2);
    CHECK(cfg2.points.size() == 81);

    SquareFunctionConfig bad = cfg.with_points({{-3}});
    CHECK_THROWS_AS(bad.validate(kGrid), std::invalid_argument);
    SquareFunctionConfig outside = cfg.with_points({{1}});   // x = -L + h
    CHECK_THROWS_AS(outside.validate(kGrid), std::invalid_argument);
}

TEST_CASE("mu accumulator agrees with operator composition") {
    // independent route: apply s_t_alpha per node and log-quadrate |.|^2
    const DyadicTGrid tg(std::exp2(-4), std::exp2(4), 4);
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid).with_t_grid(tg);
    cfg.points = {{512}, {530}, {600}};
    SampledField f = gauss_deriv(kGrid);
    const MultiIndex alpha({0.8});
    auto fast = mu_alpha(f, alpha, cfg);
    for (std::size_t pi = 0; pi < cfg.points.size(); ++pi) {
        std::vector<double> samples;
        for (double t : tg.nodes) {
            const double tv[] = {t};
            SampledField sf = s_t_alpha(f, tv, alpha);
            samples.push_back(std::norm(sf.at(cfg.points[pi][0])));
        }
        const double composed = std::sqrt(log_quadrature(samples, tg));
        CHECK(fast[pi] == doctest::Approx(composed).epsilon(1e-12));
    }
}

TEST_CASE("grid accumulator matches the point accumulator") {
    const DyadicTGrid tg(std::exp2(-4), std::exp2(4), 6);
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid).with_t_grid(tg);
    SampledField f = gauss_deriv(kGrid, 0.9, 0.2);
    const MultiIndex alpha({1.0});
    auto pts = mu_alpha(f, alpha, cfg);
    auto grid = mu_alpha_grid(f, alpha, tg);
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        CHECK(pts[i] == doctest::Approx(grid[static_cast<std::size_t>(cfg.points[i][0])])
                            .epsilon(1e-11));

    auto hpts = h_beta(f, MultiIndex({1.5}), cfg);
    auto hgrid = h_beta_grid(f, MultiIndex({1.5}), tg);
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        CHECK(hpts[i] == doctest::Approx(hgrid[static_cast<std::size_t>(cfg.points[i][0])])
                             .epsilon(1e-11));
}

TEST_CASE("symmetry zeros at the origin") {
    SampledField even = SampledField::zeros(kGrid);
    for (int m = 0; m < kGrid.points_per_axis; ++m) {
        const double x = kGrid.coord(m);
        even.at(m) = std::exp(-kPi * x * x) * std::cos(kTwoPi * x);
    }
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid);
    cfg.points = {{kGrid.points_per_axis / 2}};
    CHECK(mu_alpha(even, MultiIndex({1.0}), cfg)[0] < 1e-8);
    // even, mean-projected field for the Riesz route
    SpectralField E = forward_fourier(even);
    E.at(0) = cplx(0.0, 0.0);
    SampledField even0 = inverse_fourier(E);
    CHECK(d_alpha(even0, MultiIndex({0.5}), cfg)[0] < 1e-8);
}

TEST_CASE("absolute homogeneity and sublinearity") {
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid)
                                   .with_t_grid(DyadicTGrid(std::exp2(-6), std::exp2(6), 8));
    SampledField f = gauss_deriv(kGrid);
    SampledField g = gauss_deriv(kGrid, 0.7, -0.4);
    const double c = -2.375;
    SampledField cf = f;
    for (auto& z : cf.values) z *= c;
    SampledField fg = f;
    for (std::size_t i = 0; i < fg.values.size(); ++i) fg.values[i] += g.values[i];

    const MultiIndex a1({1.0}), b15({1.5}), ah({0.5}), l2({2.0});
    auto mf = mu_alpha(f, a1, cfg), mcf = mu_alpha(cf, a1, cfg), mg = mu_alpha(g, a1, cfg),
         mfg = mu_alpha(fg, a1, cfg);
    auto hf = h_beta(f, b15, cfg), hcf = h_beta(cf, b15, cfg), hg = h_beta(g, b15, cfg),
         hfg = h_beta(fg, b15, cfg);
    for (std::size_t i = 0; i < mf.size(); ++i) {
        CHECK(mcf[i] == doctest::Approx(std::abs(c) * mf[i]).epsilon(1e-12));
        CHECK(hcf[i] == doctest::Approx(std::abs(c) * hf[i]).epsilon(1e-12));
        CHECK(mfg[i] <= mf[i] + mg[i] + 1e-8);
        CHECK(hfg[i] <= hf[i] + hg[i] + 1e-8);
    }
    auto df = d_alpha(f, ah, cfg), dcf = d_alpha(cf, ah, cfg);
    auto g0f = g0(f, cfg), g0cf = g0(cf, cfg);
    for (std::size_t i = 0; i < df.size(); ++i) {
        CHECK(dcf[i] == doctest::Approx(std::abs(c) * df[i]).epsilon(1e-12));
        CHECK(g0cf[i] == doctest::Approx(std::abs(c) * g0f[i]).epsilon(1e-12));
    }
    // g* on a few points
    SquareFunctionConfig gs = cfg;
    gs.points = {{512}, {560}};
    auto gsf = g_star_lambda(f, l2, gs), gscf = g_star_lambda(cf, l2, gs);
    for (std::size_t i = 0; i < gsf.size(); ++i)
        CHECK(gscf[i] == doctest::Approx(std::abs(c) * gsf[i]).epsilon(1e-12));
}

TEST_CASE("translation covariance on grid-aligned shifts") {
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid)
                                   .with_t_grid(DyadicTGrid(std::exp2(-6), std::exp2(6), 8));
    SampledField f = gauss_deriv(kGrid);
    const int shift_cells = 64;   // a = 2
    const double a[] = {shift_cells * kGrid.spacing()};
    SampledField fs = shift(f, a);

    std::vector<std::vector<int>> base = {{448}, {512}, {576}};
    std::vector<std::vector<int>> moved;
    for (const auto& p : base) moved.push_back({p[0] + shift_cells});

    auto v0 = mu_alpha(f, MultiIndex({1.0}), cfg.with_points(base));
    auto v1 = mu_alpha(fs, MultiIndex({1.0}), cfg.with_points(moved));
    CHECK(rel_max_diff(v1, v0) < 1e-8);

    auto gs0 = g_star_lambda(f, MultiIndex({2.0}), cfg.with_points(base));
    auto gs1 = g_star_lambda(fs, MultiIndex({2.0}), cfg.with_points(moved));
    CHECK(rel_max_diff(gs1, gs0) < 1e-6);
}

TEST_CASE("t-grid refinement moves values by less than half a percent") {
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid);
    SampledField f = gauss_deriv(kGrid);
    SquareFunctionConfig fine = cfg.with_t_grid(cfg.t_grid.refined());

    auto m0 = mu_alpha(f, MultiIndex({1.0}), cfg), m1 = mu_alpha(f, MultiIndex({1.0}), fine);
    CHECK(rel_max_diff(m1, m0) < 0.005);
    auto h0 = h_beta(f, MultiIndex({1.5}), cfg), h1 = h_beta(f, MultiIndex({1.5}), fine);
    CHECK(rel_max_diff(h1, h0) < 0.005);
    auto g00 = g0(f, cfg), g01 = g0(f, fine);
    CHECK(rel_max_diff(g01, g00) < 0.005);
    auto d0 = d_alpha(f, MultiIndex({0.5}), cfg), d1 = d_alpha(f, MultiIndex({0.5}), fine);
    CHECK(rel_max_diff(d1, d0) < 0.005);
}

TEST_CASE("widening the t range by one octave moves values by less than 1%") {
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid);
    SampledField f = gauss_deriv(kGrid);
    SquareFunctionConfig wide = cfg.with_t_grid(cfg.t_grid.widened());

    auto m0 = mu_alpha(f, MultiIndex({1.0}), cfg), m1 = mu_alpha(f, MultiIndex({1.0}), wide);
    CHECK(rel_max_diff(m1, m0) < 0.01);
    auto h0 = h_beta(f, MultiIndex({1.5}), cfg), h1 = h_beta(f, MultiIndex({1.5}), wide);
    CHECK(rel_max_diff(h1, h0) < 0.01);
    auto g00 = g0(f, cfg), g01 = g0(f, wide);
    CHECK(rel_max_diff(g01, g00) < 0.01);
    auto d0 = d_alpha(f, MultiIndex({0.5}), cfg), d1 = d_alpha(f, MultiIndex({0.5}), wide);
    CHECK(rel_max_diff(d1, d0) < 0.01);
}

TEST_CASE("mu dilation covariance") {
    // mu(d_2 f)(x) = mu(f)(2x) up to boundary-octave truncation
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid);
    SampledField f = gauss_deriv(kGrid);
    SampledField f2 = dilate_pow2(f, 1);
    const int N = kGrid.points_per_axis;
    std::vector<std::vector<int>> pts = {{N / 2 + 32}, {N / 2 - 48}, {N / 2 + 96}};
    std::vector<std::vector<int>> pts2;
    for (const auto& p : pts) pts2.push_back({2 * p[0] - N / 2});
    auto lhs = mu_alpha(f2, MultiIndex({1.0}), cfg.with_points(pts));
    auto rhs = mu_alpha(f, MultiIndex({1.0}), cfg.with_points(pts2));
    CHECK(rel_max_diff(lhs, rhs) < 1e-4);
}

TEST_CASE("h of a single mode is x-independent and matches the R-integral") {
    const double a = 2.0;
    SampledField f = SampledField::zeros(kGrid);
    for (int m = 0; m < kGrid.points_per_axis; ++m) {
        const double ph = kTwoPi * a * kGrid.coord(m);
        f.at(m) = cplx(std::cos(ph), std::sin(ph));
    }
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid);
    const MultiIndex beta({1.5});
    auto v = h_beta(f, beta, cfg);
    double lo = 1e300, hi = 0.0;
    for (double x : v) { lo = std::min(lo, x); hi = std::max(hi, x); }
    CHECK((hi - lo) / hi < 1e-8);

    double expect2 = 0.0;
    for (double R : cfg.t_grid.nodes) {
        auto fac = tau_axis_multiplier(kGrid, R, 1.5);
        const int node = static_cast<int>(std::llround(a / kGrid.xi_spacing()));
        expect2 += cfg.t_grid.weight() * std::norm(fac[static_cast<std::size_t>(node)]);
    }
    CHECK(hi == doctest::Approx(std::sqrt(expect2)).epsilon(1e-10));

    // zero field maps to zero
    auto z = h_beta(SampledField::zeros(kGrid), beta, cfg);
    for (double x : z) CHECK(x == 0.0);
}

TEST_CASE("g0 of a single mode has the closed-form value 1/2") {
    const double a = 1.0;
    SampledField f = SampledField::zeros(kGrid);
    for (int m = 0; m < kGrid.points_per_axis; ++m) {
        const double ph = kTwoPi * a * kGrid.coord(m);
        f.at(m) = cplx(std::cos(ph), std::sin(ph));
    }
    // |d_x u|^2 = (2 pi a)^2 e^{-4 pi t a}; g0^2 = (2 pi a)^2 / (4 pi a)^2 = 1/4.
    // the t head below t_min carries ~t_min^2 mass, so reach far down
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid)
                                   .with_t_grid(DyadicTGrid(std::exp2(-14), std::exp2(4), 16));
    cfg.points = {{512}, {700}};
    auto v = g0(f, cfg);
    CHECK(v[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(v[1] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("g* window convergence and dimension guard") {
    SampledField f = SampledField::zeros(kGrid);
    for (int m = 0; m < kGrid.points_per_axis; ++m)
        f.at(m) = std::exp(-kPi * std::pow(kGrid.coord(m), 2));
    SquareFunctionConfig cfg = SquareFunctionConfig::defaults(kGrid)
                                   .with_t_grid(DyadicTGrid(std::exp2(-5), std::exp2(6), 8));
    cfg.points = {{540}};
    cfg.gstar_window = 4.0;
    auto v1 = g_star_lambda(f, MultiIndex({2.0}), cfg);
    cfg.gstar_window = 8.0;
    auto v2 = g_star_lambda(f, MultiIndex({2.0}), cfg);
    CHECK(std::abs(v2[0] - v1[0]) / v2[0] < 0.01);

    auto z = g_star_lambda(SampledField::zeros(kGrid), MultiIndex({2.0}), cfg);
    CHECK(z[0] == 0.0);

    GridSpec g3(3, 8.0, 8);
    SampledField f3 = SampledField::zeros(g3);
    CHECK_THROWS_AS(g_star_lambda(f3, MultiIndex({1.0, 1.0, 1.0}),
                                  SquareFunctionConfig::defaults(g3)),
                    std::domain_error);
}

TEST_CASE("two-dimensional mu on a separable field factorizes") {
    GridSpec g2(2, 8.0, 128);
    SampledField fx = gauss_deriv(GridSpec(1, 8.0, 128), 1.0, 0.0);
    SampledField f2 = SampledField::zeros(g2);
    for (int m0 = 0; m0 < 128; ++m0)
        for (int m1 = 0; m1 < 128; ++m1) f2.at(m0, m1) = fx.at(m0) * fx.at(m1);

    DyadicTGrid tg(std::exp2(-5), std::exp2(5), 6);
    SquareFunctionConfig cfg1 = SquareFunctionConfig::defaults(GridSpec(1, 8.0, 128))
                                    .with_t_grid(tg)
                                    .with_points({{70}, {80}});
    SquareFunctionConfig cfg2 = SquareFunctionConfig::defaults(g2).with_t_grid(tg).with_points(
        {{70, 70}, {70, 80}, {80, 80}});
    auto m1 = mu_alpha(fx, MultiIndex({1.0}), cfg1);
    auto m2 = mu_alpha(f2, MultiIndex({1.0, 1.0}), cfg2);
    CHECK(m2[0] == doctest::Approx(m1[0] * m1[0]).epsilon(1e-10));
    CHECK(m2[1] == doctest::Approx(m1[0] * m1[1]).epsilon(1e-10));
    CHECK(m2[2] == doctest::Approx(m1[1] * m1[1]).epsilon(1e-10));
}
