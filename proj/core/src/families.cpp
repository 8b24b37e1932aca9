#include "msqf/families.hpp"

#include "msqf/fft.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace msqf {

namespace {

constexpr double kPi = std::numbers::pi;

double peak_abs(const SampledField& f) {
    double m = 0.0;
    for (const cplx& z : f.values) m = std::max(m, std::abs(z));
    return m;
}

void scale_to_unit_peak(SampledField& f) {
    const double m = peak_abs(f);
    if (m > 0.0)
        for (cplx& z : f.values) z /= m;
}

/// zero the xi_j = 0 plane of every axis (exact per-axis mean removal)
SampledField project_mean_zero(const SampledField& f) {
    SpectralField F = forward_fourier(f);
    const int N = f.grid.points_per_axis;
    if (f.grid.dimension == 1) {
        F.at(0) = cplx(0.0, 0.0);
    } else {
        for (int j = 0; j < N; ++j) {
            F.at(0, j) = cplx(0.0, 0.0);
            F.at(j, 0) = cplx(0.0, 0.0);
        }
    }
    return inverse_fourier(F);
}

SampledField sample_1d(const GridSpec& g, const std::function<cplx(double)>& fn) {
    SampledField f = SampledField::zeros(g);
    for (int m = 0; m < g.points_per_axis; ++m) f.at(m) = fn(g.coord(m));
    return f;
}

SampledField sample_2d(const GridSpec& g, const std::function<cplx(double)>& f0,
                       const std::function<cplx(double)>& f1) {
    SampledField f = SampledField::zeros(g);
    for (int m0 = 0; m0 < g.points_per_axis; ++m0) {
        const cplx v0 = f0(g.coord(m0));
        for (int m1 = 0; m1 < g.points_per_axis; ++m1) f.at(m0, m1) = v0 * f1(g.coord(m1));
    }
    return f;
}

std::function<cplx(double)> gauss_deriv_fn(double sigma, double center) {
    return [sigma, center](double x) {
        const double u = (x - center) / sigma;
        return cplx(-2.0 * kPi * u / sigma * std::exp(-kPi * u * u), 0.0);
    };
}

std::function<cplx(double)> gauss_mod_fn(double sigma, double center, double omega) {
    // sine modulation about the center keeps the mean exactly zero
    return [sigma, center, omega](double x) {
        const double u = (x - center) / sigma;
        return cplx(std::exp(-kPi * u * u) * std::sin(2.0 * kPi * omega * (x - center)), 0.0);
    };
}

/// spectral construction: coefficients = profile(xi_k) per axis, zero for xi < 0
SampledField spectral_profile_field(const GridSpec& g,
                                    const std::function<cplx(double)>& profile0,
                                    const std::function<cplx(double)>& profile1) {
    SpectralField F = SpectralField::zeros(g);
    const int N = g.points_per_axis;
    auto value = [&](const std::function<cplx(double)>& p, int j) -> cplx {
        const double xi = g.freq(j);
        return xi < 0.0 ? cplx(0.0, 0.0) : p(xi);
    };
    if (g.dimension == 1) {
        for (int j = 0; j < N; ++j) F.at(j) = value(profile0, j);
    } else {
        for (int j0 = 0; j0 < N; ++j0)
            for (int j1 = 0; j1 < N; ++j1)
                F.at(j0, j1) = value(profile0, j0) * value(profile1, j1);
    }
    return inverse_fourier(F);
}

double halfline_taper_profile(double xi) {
    // xi^2 e^{-2 xi} with an essential low-end taper; all derivatives vanish
    // at 0+, which keeps the spatial tails inside the concentration budget.
    if (xi <= 0.0) return 0.0;
    return xi * xi * std::exp(-2.5 * xi - 7.0 / xi);
}

double halfline_bump_profile(double xi, double center, double width) {
    if (xi <= 0.0) return 0.0;
    const double u = (xi - center) / width;
    return std::exp(-0.5 * u * u);
}

/// Random superposition of mean-zero localized atoms (Gaussian derivatives
/// and sine-modulated Gaussians). Effectively band-limited: the spectrum
/// decays like a Gaussian past |xi| ~ a few units.
SampledField random_band_member(const GridSpec& g, SplitMix64& rng) {
    const int atoms = 8;
    std::vector<std::function<cplx(double)>> parts0, parts1;
    std::vector<double> amps;
    for (int i = 0; i < atoms; ++i) {
        const double amp = rng.uniform(0.3, 1.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        const double sigma = rng.uniform(0.6, 1.5);
        const double center = rng.uniform(-g.half_width / 5.0, g.half_width / 5.0);
        const double omega = rng.uniform(0.5, 2.5);
        const bool deriv = rng.uniform() < 0.5;
        amps.push_back(amp);
        parts0.push_back(deriv ? gauss_deriv_fn(sigma, center)
                               : gauss_mod_fn(sigma, center, omega));
        if (g.dimension == 2) {
            const double sigma1 = rng.uniform(0.6, 1.5);
            const double center1 = rng.uniform(-g.half_width / 5.0, g.half_width / 5.0);
            const double omega1 = rng.uniform(0.5, 2.5);
            parts1.push_back(rng.uniform() < 0.5 ? gauss_deriv_fn(sigma1, center1)
                                                 : gauss_mod_fn(sigma1, center1, omega1));
        }
    }
    SampledField f = SampledField::zeros(g);
    const int N = g.points_per_axis;
    if (g.dimension == 1) {
        for (int m = 0; m < N; ++m) {
            const double x = g.coord(m);
            cplx v(0.0, 0.0);
            for (int i = 0; i < atoms; ++i) v += amps[static_cast<std::size_t>(i)] * parts0[static_cast<std::size_t>(i)](x);
            f.at(m) = v;
        }
    } else {
        for (int i = 0; i < atoms; ++i) {
            for (int m0 = 0; m0 < N; ++m0) {
                const cplx v0 = amps[static_cast<std::size_t>(i)] * parts0[static_cast<std::size_t>(i)](g.coord(m0));
                if (v0 == cplx(0.0, 0.0)) continue;
                for (int m1 = 0; m1 < N; ++m1)
                    f.at(m0, m1) += v0 * parts1[static_cast<std::size_t>(i)](g.coord(m1));
            }
        }
    }
    return project_mean_zero(f);
}

} // namespace

double relative_outside_mass(const SampledField& f) {
    const GridSpec& g = f.grid;
    const int N = g.points_per_axis;
    double outside = 0.0, peak = 0.0;
    double cell = 1.0;
    for (int i = 0; i < g.dimension; ++i) cell *= g.spacing();
    auto inside = [&](double x) { return x >= -g.half_width / 2.0 && x < g.half_width / 2.0; };
    if (g.dimension == 1) {
        for (int m = 0; m < N; ++m) {
            const double a = std::abs(f.at(m));
            peak = std::max(peak, a);
            if (!inside(g.coord(m))) outside += a * cell;
        }
    } else {
        for (int m0 = 0; m0 < N; ++m0)
            for (int m1 = 0; m1 < N; ++m1) {
                const double a = std::abs(f.at(m0, m1));
                peak = std::max(peak, a);
                if (!inside(g.coord(m0)) || !inside(g.coord(m1))) outside += a * cell;
            }
    }
    return peak > 0.0 ? outside / peak : 0.0;
}

TestFamily make_family(const std::string& name, const GridSpec& grid,
                       std::uint64_t seed, int count) {
    if (count < 1) throw std::invalid_argument("make_family: count must be >= 1");
    TestFamily fam;
    fam.name = name;
    fam.grid = grid;
    SplitMix64 rng(seed ^ 0x5be5a3d0c6f1b2e7ULL);

    auto add = [&](SampledField f, const std::string& label) {
        scale_to_unit_peak(f);
        fam.members.push_back({std::move(f), label});
    };

    if (name == "gauss-deriv" || name == "gauss-mod") {
        fam.riesz_safe = true;
        struct P { double sigma, center, omega; };
        std::vector<P> params = {{1.0, 0.0, 1.0}, {0.75, 0.4, 2.0}, {1.3, -0.5, 1.5}};
        while (static_cast<int>(params.size()) < count)
            params.push_back({rng.uniform(0.6, 1.5), rng.uniform(-0.8, 0.8),
                              rng.uniform(0.8, 2.4)});
        params.resize(static_cast<std::size_t>(count));
        for (const P& p : params) {
            std::function<cplx(double)> fn =
                (name == "gauss-deriv") ? gauss_deriv_fn(p.sigma, p.center)
                                        : gauss_mod_fn(p.sigma, p.center, p.omega);
            SampledField f = (grid.dimension == 1)
                                 ? sample_1d(grid, fn)
                                 : sample_2d(grid, fn,
                                             (name == "gauss-deriv")
                                                 ? gauss_deriv_fn(p.sigma * 1.1, -p.center)
                                                 : gauss_mod_fn(p.sigma * 1.1, -p.center,
                                                                p.omega * 0.75));
            add(project_mean_zero(f), name + "(sigma=" + std::to_string(p.sigma) +
                                          ",c=" + std::to_string(p.center) + ")");
        }
    } else if (name == "half-line") {
        fam.half_line = true;
        std::vector<std::function<cplx(double)>> profiles;
        if (grid.dimension == 1) {
            // the slow-decay profile needs the 1d grid's frequency headroom;
            // narrow bumps are fine at L = 16 but too wide in space at L = 8
            profiles.push_back([](double xi) { return cplx(halfline_taper_profile(xi), 0.0); });
            profiles.push_back([](double xi) {
                return cplx(halfline_bump_profile(xi, 3.0, 0.4), 0.0);
            });
            profiles.push_back([](double xi) {
                return cplx(halfline_bump_profile(xi, 2.0, 0.26) +
                                0.6 * halfline_bump_profile(xi, 4.0, 0.45),
                            0.2 * halfline_bump_profile(xi, 3.5, 0.45));
            });
        } else {
            profiles.push_back([](double xi) {
                return cplx(halfline_bump_profile(xi, 4.0, 0.5), 0.0);
            });
            profiles.push_back([](double xi) {
                return cplx(halfline_bump_profile(xi, 3.8, 0.48), 0.0);
            });
            profiles.push_back([](double xi) {
                return cplx(halfline_bump_profile(xi, 3.6, 0.45),
                            0.5 * halfline_bump_profile(xi, 4.2, 0.52));
            });
        }
        while (static_cast<int>(profiles.size()) < count) {
            const double c = (grid.dimension == 1) ? rng.uniform(2.0, 4.5)
                                                   : rng.uniform(3.6, 4.3);
            const double w = rng.uniform(c / 8.5, c / 7.7);
            profiles.push_back([c, w](double xi) {
                return cplx(halfline_bump_profile(xi, c, w), 0.0);
            });
        }
        profiles.resize(static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < profiles.size(); ++i)
            add(spectral_profile_field(grid, profiles[i],
                                       profiles[(i + 1) % profiles.size()]),
                "half-line[" + std::to_string(i) + "]");
    } else if (name == "random-band") {
        fam.riesz_safe = true;
        for (int i = 0; i < count; ++i)
            add(random_band_member(grid, rng), "random-band[" + std::to_string(i) + "]");
    } else {
        throw std::invalid_argument("make_family: unknown family " + name);
    }

    for (const FamilyMember& m : fam.members) {
        const double leak = relative_outside_mass(m.field);
        if (leak >= 1e-10)
            throw std::domain_error("make_family: member " + m.label +
                                    " not concentrated, outside mass " +
                                    std::to_string(leak));
    }
    return fam;
}

} // namespace msqf
