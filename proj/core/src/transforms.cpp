#include "msqf/transforms.hpp"

#include "msqf/fft.hpp"
#include "msqf/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace msqf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<std::vector<cplx>> unit_factors(const GridSpec& g) {
    return std::vector<std::vector<cplx>>(
        static_cast<std::size_t>(g.dimension),
        std::vector<cplx>(static_cast<std::size_t>(g.points_per_axis), cplx(1.0, 0.0)));
}

SampledField apply_axes(const SampledField& f, std::span<const std::vector<cplx>> factors) {
    return inverse_fourier(spectral_multiply_axes(forward_fourier(f), factors));
}

double max_abs(std::span<const cplx> v) {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
}

} // namespace

SpectralField spectral_multiply_axes(const SpectralField& F,
                                     std::span<const std::vector<cplx>> factors) {
    const GridSpec& g = F.grid;
    if (factors.size() != static_cast<std::size_t>(g.dimension))
        throw std::invalid_argument("spectral_multiply_axes: factor count != dimension");
    for (const auto& fac : factors)
        if (fac.size() != static_cast<std::size_t>(g.points_per_axis))
            throw std::invalid_argument("spectral_multiply_axes: factor length != N");
    SpectralField out = F;
    const int N = g.points_per_axis;
    if (g.dimension == 1) {
        for (int j = 0; j < N; ++j) out.at(j) *= factors[0][static_cast<std::size_t>(j)];
    } else if (g.dimension == 2) {
        for (int j0 = 0; j0 < N; ++j0) {
            const cplx f0 = factors[0][static_cast<std::size_t>(j0)];
            for (int j1 = 0; j1 < N; ++j1)
                out.at(j0, j1) *= f0 * factors[1][static_cast<std::size_t>(j1)];
        }
    } else {
        throw std::invalid_argument("spectral_multiply_axes: n > 2 not supported");
    }
    return out;
}

SampledField hilbert(const SampledField& f, std::span<const int> axes) {
    auto fac = unit_factors(f.grid);
    for (int a : axes) {
        if (a < 0 || a >= f.grid.dimension)
            throw std::invalid_argument("hilbert: axis out of range");
        for (int j = 0; j < f.grid.points_per_axis; ++j) {
            const double xi = f.grid.freq(j);
            const double s = (xi > 0.0) ? 1.0 : (xi < 0.0 ? -1.0 : 0.0);
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] = cplx(0.0, -s);
        }
    }
    return apply_axes(f, fac);
}

SampledField hilbert_all(const SampledField& f) {
    std::vector<int> axes(static_cast<std::size_t>(f.grid.dimension));
    for (int i = 0; i < f.grid.dimension; ++i) axes[static_cast<std::size_t>(i)] = i;
    return hilbert(f, axes);
}

SampledField riesz_potential(const SampledField& f, const MultiIndex& alpha) {
    const GridSpec& g = f.grid;
    if (alpha.dimension() != g.dimension)
        throw std::invalid_argument("riesz_potential: index dimension mismatch");
    alpha.require_in(0.0, 1.0, "riesz_potential alpha");
    SpectralField F = forward_fourier(f);
    const double peak = max_abs(F.coefficients);
    const double dc = std::abs(F.coefficients[0]);
    if (peak > 0.0 && dc > 1e-10 * peak)
        throw std::domain_error("riesz_potential: mean not zero, |fhat(0)| = " +
                                std::to_string(dc) + " vs 1e-10 * " + std::to_string(peak));
    auto fac = unit_factors(g);
    for (int a = 0; a < g.dimension; ++a) {
        for (int j = 0; j < g.points_per_axis; ++j) {
            const double xi = g.freq(j);
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                (xi == 0.0) ? cplx(0.0, 0.0) : cplx(std::pow(std::abs(xi), -alpha[a]), 0.0);
        }
    }
    return inverse_fourier(spectral_multiply_axes(F, fac));
}

SampledField s_t_alpha(const SampledField& f, std::span<const double> t,
                       const MultiIndex& alpha) {
    const GridSpec& g = f.grid;
    if (alpha.dimension() != g.dimension || t.size() != static_cast<std::size_t>(g.dimension))
        throw std::invalid_argument("s_t_alpha: dimension mismatch");
    auto fac = unit_factors(g);
    for (int a = 0; a < g.dimension; ++a) {
        if (!(t[static_cast<std::size_t>(a)] > 0.0))
            throw std::domain_error("s_t_alpha: t must be positive");
        for (int j = 0; j < g.points_per_axis; ++j)
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                phi_alpha_hat(alpha[a], t[static_cast<std::size_t>(a)] * g.freq(j));
    }
    return apply_axes(f, fac);
}

std::vector<cplx> tau_axis_multiplier(const GridSpec& g, double R, double beta) {
    if (!(R > 0.0)) throw std::domain_error("tau_R_beta: R must be positive");
    if (!(beta > 0.0)) throw std::domain_error("tau_R_beta: beta must be positive");
    const int N = g.points_per_axis;
    const double dxi = g.xi_spacing();
    std::vector<cplx> fac(static_cast<std::size_t>(N), cplx(0.0, 0.0));
    for (int j = 0; j < N; ++j) {
        const double axi = std::abs(g.freq(j));
        if (axi > R) continue;
        const double s = axi / R;
        if (s < 1.0)
            fac[static_cast<std::size_t>(j)] = beta * s * std::pow(1.0 - s, beta - 1.0);
        // s == 1 exactly: pointwise value is 0 for beta > 1, +inf for beta < 1,
        // beta for beta == 1; leave 0, the cell average below overrides for beta < 1.
        else if (beta == 1.0)
            fac[static_cast<std::size_t>(j)] = 1.0;
    }
    if (beta < 1.0) {
        // cell average across the integrable edge singularity
        const long long kstar = std::llround(R / dxi);
        if (kstar >= 1 && kstar < N / 2) {
            const double lo = (kstar - 0.5) * dxi / R;
            const double hi = (kstar + 0.5) * dxi / R;
            auto prim = [beta](double s) {
                const double u = 1.0 - s;
                return -std::pow(u, beta) / beta + std::pow(u, beta + 1.0) / (beta + 1.0);
            };
            const double slo = std::min(std::max(lo, 0.0), 1.0);
            const double shi = std::min(std::max(hi, 0.0), 1.0);
            const double avg = (R / dxi) * beta * (prim(shi) - prim(slo));
            fac[static_cast<std::size_t>(kstar)] = avg;
            fac[static_cast<std::size_t>(N - kstar)] = avg;   // mirror node
        }
    }
    return fac;
}

SampledField tau_R_beta(const SampledField& f, std::span<const double> R,
                        const MultiIndex& beta) {
    const GridSpec& g = f.grid;
    if (beta.dimension() != g.dimension || R.size() != static_cast<std::size_t>(g.dimension))
        throw std::invalid_argument("tau_R_beta: dimension mismatch");
    std::vector<std::vector<cplx>> fac;
    fac.reserve(static_cast<std::size_t>(g.dimension));
    for (int a = 0; a < g.dimension; ++a)
        fac.push_back(tau_axis_multiplier(g, R[static_cast<std::size_t>(a)], beta[a]));
    return apply_axes(f, fac);
}

SampledField poisson_extension(const SampledField& f, std::span<const double> t) {
    const GridSpec& g = f.grid;
    if (t.size() != static_cast<std::size_t>(g.dimension))
        throw std::invalid_argument("poisson_extension: dimension mismatch");
    auto fac = unit_factors(g);
    for (int a = 0; a < g.dimension; ++a) {
        if (!(t[static_cast<std::size_t>(a)] > 0.0))
            throw std::domain_error("poisson_extension: t must be positive");
        for (int j = 0; j < g.points_per_axis; ++j)
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                std::exp(-kTwoPi * t[static_cast<std::size_t>(a)] * std::abs(g.freq(j)));
    }
    return apply_axes(f, fac);
}

SampledField poisson_partial(const SampledField& f, std::span<const double> t,
                             std::span<const PoissonDeriv> which) {
    const GridSpec& g = f.grid;
    if (t.size() != static_cast<std::size_t>(g.dimension) ||
        which.size() != static_cast<std::size_t>(g.dimension))
        throw std::invalid_argument("poisson_partial: dimension mismatch");
    auto fac = unit_factors(g);
    for (int a = 0; a < g.dimension; ++a) {
        if (!(t[static_cast<std::size_t>(a)] > 0.0))
            throw std::domain_error("poisson_partial: t must be positive");
        for (int j = 0; j < g.points_per_axis; ++j) {
            const double xi = g.freq(j);
            const double decay = std::exp(-kTwoPi * t[static_cast<std::size_t>(a)] * std::abs(xi));
            const cplx theta = (which[static_cast<std::size_t>(a)] == PoissonDeriv::dt)
                                   ? cplx(-kTwoPi * std::abs(xi), 0.0)
                                   : cplx(0.0, kTwoPi * xi);
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] = decay * theta;
        }
    }
    return apply_axes(f, fac);
}

SampledField delta_first(const SampledField& f, std::span<const double> t,
                         std::span<const int> axes) {
    auto fac = unit_factors(f.grid);
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const int a = axes[i];
        if (a < 0 || a >= f.grid.dimension)
            throw std::invalid_argument("delta_first: axis out of range");
        for (int j = 0; j < f.grid.points_per_axis; ++j)
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                cplx(0.0, -2.0 * std::sin(kTwoPi * t[i] * f.grid.freq(j)));
    }
    return apply_axes(f, fac);
}

SampledField delta_second(const SampledField& f, std::span<const double> t,
                          std::span<const int> axes) {
    auto fac = unit_factors(f.grid);
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const int a = axes[i];
        if (a < 0 || a >= f.grid.dimension)
            throw std::invalid_argument("delta_second: axis out of range");
        for (int j = 0; j < f.grid.points_per_axis; ++j)
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                cplx(2.0 * std::cos(kTwoPi * t[i] * f.grid.freq(j)) - 2.0, 0.0);
    }
    return apply_axes(f, fac);
}

SampledField antiderivative(const SampledField& f) {
    const GridSpec& g = f.grid;
    SpectralField F = forward_fourier(f);
    const double peak = max_abs(F.coefficients);
    const double dc = std::abs(F.coefficients[0]);
    if (peak > 0.0 && dc > 1e-10 * peak)
        throw std::domain_error("antiderivative: field is not mean-zero");
    auto fac = unit_factors(g);
    for (int a = 0; a < g.dimension; ++a) {
        for (int j = 0; j < g.points_per_axis; ++j) {
            const double xi = g.freq(j);
            fac[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] =
                (xi == 0.0) ? cplx(0.0, 0.0) : 1.0 / cplx(0.0, kTwoPi * xi);
        }
    }
    return inverse_fourier(spectral_multiply_axes(F, fac));
}

SampledField shift(const SampledField& f, std::span<const double> a) {
    const GridSpec& g = f.grid;
    if (a.size() != static_cast<std::size_t>(g.dimension))
        throw std::invalid_argument("shift: dimension mismatch");
    auto fac = unit_factors(g);
    for (int ax = 0; ax < g.dimension; ++ax)
        for (int j = 0; j < g.points_per_axis; ++j) {
            const double ph = -kTwoPi * a[static_cast<std::size_t>(ax)] * g.freq(j);
            fac[static_cast<std::size_t>(ax)][static_cast<std::size_t>(j)] =
                cplx(std::cos(ph), std::sin(ph));
        }
    return apply_axes(f, fac);
}

SampledField dilate_pow2(const SampledField& f, int log2r) {
    if (log2r < 1) throw std::invalid_argument("dilate_pow2: log2r must be >= 1");
    const GridSpec& g = f.grid;
    const int r = 1 << log2r;
    const int N = g.points_per_axis;
    SpectralField F = forward_fourier(f);
    SpectralField G = SpectralField::zeros(g);
    auto map_index = [&](int j) -> int {
        const int s = g.signed_index(j);
        const long long rs = static_cast<long long>(s) * r;
        if (rs < -N / 2 || rs >= N / 2) return -1;
        return static_cast<int>((rs + N) % N);
    };
    if (g.dimension == 1) {
        for (int j = 0; j < N; ++j) {
            const int m = map_index(j);
            if (m >= 0) G.at(m) = F.at(j);
        }
    } else {
        for (int j0 = 0; j0 < N; ++j0) {
            const int m0 = map_index(j0);
            if (m0 < 0) continue;
            for (int j1 = 0; j1 < N; ++j1) {
                const int m1 = map_index(j1);
                if (m1 >= 0) G.at(m0, m1) = F.at(j0, j1);
            }
        }
    }
    return inverse_fourier(G);
}

} // namespace msqf
