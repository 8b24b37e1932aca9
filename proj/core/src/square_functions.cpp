#include "msqf/square_functions.hpp"

#include "msqf/fft.hpp"
#include "msqf/kernels.hpp"
#include "msqf/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace msqf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{2 pi i x xi_k} * dxi for one axis position x = coord(m)
void fill_phase_row(const GridSpec& g, int m, cplx* out) {
    const double x = g.coord(m);
    const double dxi = g.xi_spacing();
    for (int k = 0; k < g.points_per_axis; ++k) {
        const double ph = kTwoPi * x * g.freq(k);
        out[k] = cplx(std::cos(ph) * dxi, std::sin(ph) * dxi);
    }
}

} // namespace

SquareFunctionConfig SquareFunctionConfig::defaults(const GridSpec& g) {
    SquareFunctionConfig c;
    // m = 32 keeps the h/D refinement drift inside the half-percent gate
    c.t_grid = (g.dimension == 1) ? DyadicTGrid(std::exp2(-8), std::exp2(8), 32)
                                  : DyadicTGrid(std::exp2(-8), std::exp2(8), 8);
    const int N = g.points_per_axis;
    const int lo = 3 * N / 8, hi = 5 * N / 8;
    if (g.dimension == 1) {
        const int stride = std::max(1, N / 128);
        std::vector<std::vector<int>> pts;
        for (int m = lo; m <= hi; m += stride) pts.push_back({m});
        c.points = std::move(pts);
    } else {
        const int stride = std::max(1, N / 32);
        std::vector<std::vector<int>> pts;
        for (int m0 = lo; m0 <= hi; m0 += stride)
            for (int m1 = lo; m1 <= hi; m1 += stride) pts.push_back({m0, m1});
        c.points = std::move(pts);
    }
    c.gstar_window = g.half_width / 2.0;
    c.gstar_y_stride = (g.dimension == 1) ? 1 : 2;
    return c;
}

void SquareFunctionConfig::validate(const GridSpec& g) const {
    if (t_grid.count() < 1) throw std::invalid_argument("SquareFunctionConfig: empty t grid");
    for (const auto& p : points) {
        if (p.size() != static_cast<std::size_t>(g.dimension))
            throw std::invalid_argument("SquareFunctionConfig: point dimension mismatch");
        for (std::size_t a = 0; a < p.size(); ++a) {
            if (p[a] < 0 || p[a] >= g.points_per_axis)
                throw std::invalid_argument("SquareFunctionConfig: point index out of grid");
            const double x = g.coord(p[a]);
            if (!(x >= -g.half_width / 2.0) || !(x < g.half_width / 2.0))
                throw std::invalid_argument(
                    "SquareFunctionConfig: evaluation points must lie inside [-L/2, L/2)");
        }
    }
}

namespace detail {

std::vector<double> accumulate_points(const SpectralField& F,
                                      std::span<const AxisTable> tables,
                                      double axis_weight,
                                      std::span<const std::vector<int>> pts) {
    const GridSpec& g = F.grid;
    const int N = g.points_per_axis;
    const int n = g.dimension;
    if (tables.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("accumulate_points: table count != dimension");
    const std::size_t P = pts.size();
    std::vector<double> out(P, 0.0);

    if (n == 1) {
        const AxisTable& T = tables[0];
        // G[p][k] = F_k * phase(p, k)
        std::vector<cplx> G(P * static_cast<std::size_t>(N));
        std::vector<cplx> phase(static_cast<std::size_t>(N));
        for (std::size_t p = 0; p < P; ++p) {
            fill_phase_row(g, pts[p][0], phase.data());
            for (int k = 0; k < N; ++k)
                G[p * N + static_cast<std::size_t>(k)] = F.at(k) * phase[static_cast<std::size_t>(k)];
        }
        for (int r = 0; r < T.rows; ++r) {
            const cplx* row = T.row(r);
            for (std::size_t p = 0; p < P; ++p) {
                cplx s(0.0, 0.0);
                const cplx* gp = G.data() + p * static_cast<std::size_t>(N);
                for (int k = 0; k < N; ++k) s += row[k] * gp[k];
                out[p] += axis_weight * std::norm(s);
            }
        }
        return out;
    }

    if (n != 2) throw std::invalid_argument("accumulate_points: n > 2 not supported");

    // distinct per-axis positions
    std::vector<int> pos0, pos1;
    for (const auto& p : pts) {
        if (std::find(pos0.begin(), pos0.end(), p[0]) == pos0.end()) pos0.push_back(p[0]);
        if (std::find(pos1.begin(), pos1.end(), p[1]) == pos1.end()) pos1.push_back(p[1]);
    }
    const int P0 = static_cast<int>(pos0.size());
    const int P1 = static_cast<int>(pos1.size());
    const AxisTable& T0 = tables[0];
    const AxisTable& T1 = tables[1];

    // phases
    std::vector<cplx> E0(static_cast<std::size_t>(P0) * N), E1(static_cast<std::size_t>(P1) * N);
    for (int p = 0; p < P0; ++p) fill_phase_row(g, pos0[static_cast<std::size_t>(p)], E0.data() + static_cast<std::size_t>(p) * N);
    for (int p = 0; p < P1; ++p) fill_phase_row(g, pos1[static_cast<std::size_t>(p)], E1.data() + static_cast<std::size_t>(p) * N);

    // stage A: A[(r1, p1)][k0] = sum_k1 F[k0][k1] T1[r1][k1] E1[p1][k1]
    const std::size_t Q1 = static_cast<std::size_t>(T1.rows) * P1;
    std::vector<cplx> A(Q1 * static_cast<std::size_t>(N));
    std::vector<cplx> w1(static_cast<std::size_t>(N));
    for (int r1 = 0; r1 < T1.rows; ++r1) {
        const cplx* row = T1.row(r1);
        for (int p1 = 0; p1 < P1; ++p1) {
            const cplx* e = E1.data() + static_cast<std::size_t>(p1) * N;
            for (int k = 0; k < N; ++k) w1[static_cast<std::size_t>(k)] = row[k] * e[k];
            cplx* dst = A.data() + (static_cast<std::size_t>(r1) * P1 + p1) * N;
            for (int k0 = 0; k0 < N; ++k0) {
                const cplx* frow = F.coefficients.data() + static_cast<std::size_t>(k0) * N;
                cplx s(0.0, 0.0);
                for (int k1 = 0; k1 < N; ++k1) s += frow[k1] * w1[static_cast<std::size_t>(k1)];
                dst[k0] = s;
            }
        }
    }

    // map full point list to (p0, p1) lattice accumulation
    std::vector<double> acc(static_cast<std::size_t>(P0) * P1, 0.0);
    std::vector<cplx> w0(static_cast<std::size_t>(N));
    const double w2 = axis_weight * axis_weight;
    for (int r0 = 0; r0 < T0.rows; ++r0) {
        const cplx* row = T0.row(r0);
        for (int p0 = 0; p0 < P0; ++p0) {
            const cplx* e = E0.data() + static_cast<std::size_t>(p0) * N;
            for (int k = 0; k < N; ++k) w0[static_cast<std::size_t>(k)] = row[k] * e[k];
            for (std::size_t q1 = 0; q1 < Q1; ++q1) {
                const cplx* a = A.data() + q1 * static_cast<std::size_t>(N);
                cplx s(0.0, 0.0);
                for (int k0 = 0; k0 < N; ++k0) s += w0[static_cast<std::size_t>(k0)] * a[k0];
                acc[static_cast<std::size_t>(p0) * P1 + static_cast<std::size_t>(q1 % P1)] +=
                    w2 * std::norm(s);
            }
        }
    }

    for (std::size_t p = 0; p < P; ++p) {
        const auto i0 = static_cast<std::size_t>(
            std::find(pos0.begin(), pos0.end(), pts[p][0]) - pos0.begin());
        const auto i1 = static_cast<std::size_t>(
            std::find(pos1.begin(), pos1.end(), pts[p][1]) - pos1.begin());
        out[p] = acc[i0 * P1 + i1];
    }
    return out;
}

std::vector<double> accumulate_grid(const SpectralField& F,
                                    std::span<const AxisTable> tables,
                                    double axis_weight) {
    const GridSpec& g = F.grid;
    const int N = g.points_per_axis;
    const int n = g.dimension;
    if (tables.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("accumulate_grid: table count != dimension");
    std::vector<double> out(g.size(), 0.0);

    FftPlan plan(N);
    const double dxi = g.xi_spacing();

    if (n == 1) {
        const AxisTable& T = tables[0];
        std::vector<cplx> buf(static_cast<std::size_t>(N));
        for (int r = 0; r < T.rows; ++r) {
            const cplx* row = T.row(r);
            for (int j = 0; j < N; ++j) {
                buf[static_cast<std::size_t>(j)] = F.at(j) * row[j] * ((j & 1) ? -1.0 : 1.0);
            }
            plan.inverse(buf.data());
            for (int m = 0; m < N; ++m)
                out[static_cast<std::size_t>(m)] +=
                    axis_weight * std::norm(buf[static_cast<std::size_t>(m)] * dxi);
        }
        return out;
    }
    if (n != 2) throw std::invalid_argument("accumulate_grid: n > 2 not supported");

    const AxisTable& T0 = tables[0];
    const AxisTable& T1 = tables[1];
    const double w2 = axis_weight * axis_weight;
    const double scale2 = dxi * dxi;

    std::vector<cplx> V(static_cast<std::size_t>(N) * N);
    std::vector<cplx> col(static_cast<std::size_t>(N));
    std::vector<cplx> rowbuf(static_cast<std::size_t>(N));
    for (int r0 = 0; r0 < T0.rows; ++r0) {
        const cplx* m0 = T0.row(r0);
        // V = IDFT_axis0( (-1)^{j0} m0[j0] F[j0][j1] )
        for (int j1 = 0; j1 < N; ++j1) {
            for (int j0 = 0; j0 < N; ++j0)
                col[static_cast<std::size_t>(j0)] =
                    F.at(j0, j1) * m0[j0] * ((j0 & 1) ? -1.0 : 1.0);
            plan.inverse(col.data());
            for (int j0 = 0; j0 < N; ++j0)
                V[static_cast<std::size_t>(j0) * N + j1] = col[static_cast<std::size_t>(j0)];
        }
        for (int r1 = 0; r1 < T1.rows; ++r1) {
            const cplx* m1 = T1.row(r1);
            for (int m = 0; m < N; ++m) {
                const cplx* vrow = V.data() + static_cast<std::size_t>(m) * N;
                for (int j1 = 0; j1 < N; ++j1)
                    rowbuf[static_cast<std::size_t>(j1)] =
                        vrow[j1] * m1[j1] * ((j1 & 1) ? -1.0 : 1.0);
                plan.inverse(rowbuf.data());
                double* orow = out.data() + static_cast<std::size_t>(m) * N;
                for (int j1 = 0; j1 < N; ++j1)
                    orow[j1] += w2 * std::norm(rowbuf[static_cast<std::size_t>(j1)] * scale2);
            }
        }
    }
    return out;
}

AxisTable phi_axis_table(const GridSpec& g, double alpha, const DyadicTGrid& tg) {
    // memoized per (alpha, frequency grid, t grid); rebuilds are bit-identical
    struct Key {
        double alpha, tmin, tmax, L;
        int m, N;
        auto operator<=>(const Key&) const = default;
    };
    static std::map<Key, AxisTable> cache;
    static std::mutex cache_mutex;
    const Key key{alpha, tg.t_min, tg.t_max, g.half_width, tg.steps_per_octave,
                  g.points_per_axis};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    AxisTable T;
    T.rows = tg.count();
    T.n = g.points_per_axis;
    T.m.resize(static_cast<std::size_t>(T.rows) * T.n);
    for (int r = 0; r < T.rows; ++r) {
        const double t = tg.nodes[static_cast<std::size_t>(r)];
        cplx* row = T.row(r);
        // odd in xi: evaluate k <= N/2 and mirror the interior
        for (int k = 0; k <= T.n / 2; ++k) row[k] = phi_alpha_hat(alpha, t * g.freq(k));
        for (int k = T.n / 2 + 1; k < T.n; ++k) row[k] = -row[T.n - k];
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(T)).first->second;
}

} // namespace detail

namespace {

using detail::AxisTable;

// shared wrapper: build per-axis tables (reusing equal-parameter axes), run
// the point accumulator, take square roots
std::vector<double> run_pointwise(const SampledField& f, const SquareFunctionConfig& cfg,
                                  const std::vector<AxisTable>& tables) {
    cfg.validate(f.grid);
    SpectralField F = forward_fourier(f);
    auto sums = detail::accumulate_points(F, tables, cfg.t_grid.weight(), cfg.points);
    for (double& v : sums) v = std::sqrt(v);
    return sums;
}

AxisTable delta_axis_table(const GridSpec& g, const DyadicTGrid& tg, double alpha) {
    AxisTable T;
    T.rows = tg.count();
    T.n = g.points_per_axis;
    T.m.resize(static_cast<std::size_t>(T.rows) * T.n);
    for (int r = 0; r < T.rows; ++r) {
        const double t = tg.nodes[static_cast<std::size_t>(r)];
        const double tw = std::pow(t, -alpha);
        cplx* row = T.row(r);
        for (int k = 0; k < T.n; ++k)
            row[k] = cplx(0.0, -2.0 * std::sin(kTwoPi * t * g.freq(k)) * tw);
    }
    return T;
}

AxisTable g0_axis_table(const GridSpec& g, const DyadicTGrid& tg) {
    AxisTable T;
    T.rows = tg.count();
    T.n = g.points_per_axis;
    T.m.resize(static_cast<std::size_t>(T.rows) * T.n);
    for (int r = 0; r < T.rows; ++r) {
        const double t = tg.nodes[static_cast<std::size_t>(r)];
        cplx* row = T.row(r);
        for (int k = 0; k < T.n; ++k) {
            const double xi = g.freq(k);
            // d/dx multiplier times t: the measure t dt = t^2 dt/t
            row[k] = cplx(0.0, kTwoPi * xi) * std::exp(-kTwoPi * t * std::abs(xi)) * t;
        }
    }
    return T;
}

AxisTable mu_diff_axis_table(const GridSpec& g, const DyadicTGrid& tg) {
    // -Delta_t(antiderivative)(x) / t as a single spectral factor:
    // -(2 cos(2 pi t xi) - 2) / (2 pi i xi t), 0 at xi = 0
    AxisTable T;
    T.rows = tg.count();
    T.n = g.points_per_axis;
    T.m.resize(static_cast<std::size_t>(T.rows) * T.n);
    for (int r = 0; r < T.rows; ++r) {
        const double t = tg.nodes[static_cast<std::size_t>(r)];
        cplx* row = T.row(r);
        for (int k = 0; k < T.n; ++k) {
            const double xi = g.freq(k);
            row[k] = (xi == 0.0)
                         ? cplx(0.0, 0.0)
                         : -(2.0 * std::cos(kTwoPi * t * xi) - 2.0) / cplx(0.0, kTwoPi * xi * t);
        }
    }
    return T;
}

AxisTable tau_axis_table(const GridSpec& g, double beta, const DyadicTGrid& rg) {
    AxisTable T;
    T.rows = rg.count();
    T.n = g.points_per_axis;
    T.m.resize(static_cast<std::size_t>(T.rows) * T.n);
    for (int r = 0; r < T.rows; ++r) {
        auto fac = tau_axis_multiplier(g, rg.nodes[static_cast<std::size_t>(r)], beta);
        std::copy(fac.begin(), fac.end(), T.row(r));
    }
    return T;
}

// reuse tables across axes with equal parameters
template <typename Build>
std::vector<AxisTable> per_axis_tables(int n, const MultiIndex& idx, Build&& build) {
    std::vector<AxisTable> tables;
    tables.reserve(static_cast<std::size_t>(n));
    std::map<double, std::size_t> seen;
    for (int a = 0; a < n; ++a) {
        auto it = seen.find(idx[a]);
        if (it != seen.end()) {
            tables.push_back(tables[it->second]);
        } else {
            tables.push_back(build(idx[a]));
            seen.emplace(idx[a], tables.size() - 1);
        }
    }
    return tables;
}

} // namespace

std::vector<double> mu_alpha(const SampledField& f, const MultiIndex& alpha,
                             const SquareFunctionConfig& cfg) {
    if (alpha.dimension() != f.grid.dimension)
        throw std::invalid_argument("mu_alpha: index dimension mismatch");
    auto tables = per_axis_tables(f.grid.dimension, alpha, [&](double a) {
        return detail::phi_axis_table(f.grid, a, cfg.t_grid);
    });
    return run_pointwise(f, cfg, tables);
}

std::vector<double> mu_via_differences(const SampledField& f,
                                       const SquareFunctionConfig& cfg) {
    SpectralField F = forward_fourier(f);
    double peak = 0.0;
    for (const cplx& z : F.coefficients) peak = std::max(peak, std::abs(z));
    if (peak > 0.0 && std::abs(F.coefficients[0]) > 1e-10 * peak)
        throw std::domain_error("mu_via_differences: field is not mean-zero");
    std::vector<AxisTable> tables(static_cast<std::size_t>(f.grid.dimension),
                                  mu_diff_axis_table(f.grid, cfg.t_grid));
    return run_pointwise(f, cfg, tables);
}

std::vector<double> h_beta(const SampledField& f, const MultiIndex& beta,
                           const SquareFunctionConfig& cfg) {
    if (beta.dimension() != f.grid.dimension)
        throw std::invalid_argument("h_beta: index dimension mismatch");
    auto tables = per_axis_tables(f.grid.dimension, beta, [&](double b) {
        return tau_axis_table(f.grid, b, cfg.t_grid);
    });
    return run_pointwise(f, cfg, tables);
}

std::vector<double> d_alpha(const SampledField& f, const MultiIndex& alpha,
                            const SquareFunctionConfig& cfg) {
    if (alpha.dimension() != f.grid.dimension)
        throw std::invalid_argument("d_alpha: index dimension mismatch");
    alpha.require_in(0.0, 1.0, "d_alpha alpha");
    SampledField g = riesz_potential(f, alpha);
    auto tables = per_axis_tables(f.grid.dimension, alpha, [&](double a) {
        return delta_axis_table(f.grid, cfg.t_grid, a);
    });
    return run_pointwise(g, cfg, tables);
}

std::vector<double> g0(const SampledField& f, const SquareFunctionConfig& cfg) {
    std::vector<AxisTable> tables(static_cast<std::size_t>(f.grid.dimension),
                                  g0_axis_table(f.grid, cfg.t_grid));
    return run_pointwise(f, cfg, tables);
}

namespace {

// Poisson-derivative spectral factor for one axis at height t.
inline cplx poisson_theta_factor(double xi, double t, bool dy) {
    const double decay = std::exp(-kTwoPi * t * std::abs(xi));
    return dy ? cplx(0.0, kTwoPi * xi) * decay : cplx(-kTwoPi * std::abs(xi) * decay, 0.0);
}

struct GStarAxis {
    std::vector<int> ys;            // y lattice (grid indices)
    std::vector<cplx> phases;       // Y x N, e^{2 pi i y xi} dxi
    std::vector<double> weights;    // K x Y: (dt/t wt) * t * ycell * (t/(t+|x-y|))^lambda
};

GStarAxis build_gstar_axis(const GridSpec& g, const DyadicTGrid& tg, int center,
                           double lambda, double window, int stride) {
    GStarAxis ax;
    const int N = g.points_per_axis;
    const double h = g.spacing();
    const int halfw = std::max(1, static_cast<int>(std::floor(window / (h * stride))));
    for (int dy = -halfw; dy <= halfw; ++dy) {
        const int m = center + dy * stride;
        if (m >= 0 && m < N) ax.ys.push_back(m);
    }
    const int Y = static_cast<int>(ax.ys.size());
    ax.phases.resize(static_cast<std::size_t>(Y) * N);
    for (int yi = 0; yi < Y; ++yi)
        fill_phase_row(g, ax.ys[static_cast<std::size_t>(yi)],
                       ax.phases.data() + static_cast<std::size_t>(yi) * N);
    const double x = g.coord(center);
    const double ycell = h * stride;
    const int K = tg.count();
    ax.weights.resize(static_cast<std::size_t>(K) * Y);
    for (int r = 0; r < K; ++r) {
        const double t = tg.nodes[static_cast<std::size_t>(r)];
        for (int yi = 0; yi < Y; ++yi) {
            const double y = g.coord(ax.ys[static_cast<std::size_t>(yi)]);
            ax.weights[static_cast<std::size_t>(r) * Y + yi] =
                tg.weight() * t * ycell * std::pow(t / (t + std::abs(x - y)), lambda);
        }
    }
    return ax;
}

} // namespace

std::vector<double> g_star_lambda(const SampledField& f, const MultiIndex& lambda,
                                  const SquareFunctionConfig& cfg) {
    const GridSpec& g = f.grid;
    const int n = g.dimension;
    if (n > 2) throw std::domain_error("g_star_lambda: n > 2 unsupported");
    if (lambda.dimension() != n)
        throw std::invalid_argument("g_star_lambda: index dimension mismatch");
    cfg.validate(g);
    SpectralField F = forward_fourier(f);

    const int N = g.points_per_axis;
    const int stride = std::max(1, cfg.gstar_y_stride);
    const int K = cfg.t_grid.count();
    std::vector<double> out(cfg.points.size(), 0.0);

    if (n == 1) {
        for (std::size_t pi = 0; pi < cfg.points.size(); ++pi) {
            GStarAxis ax = build_gstar_axis(g, cfg.t_grid, cfg.points[pi][0], lambda[0],
                                            cfg.gstar_window, stride);
            const int Y = static_cast<int>(ax.ys.size());
            double total = 0.0;
            std::vector<cplx> mrow(static_cast<std::size_t>(N));
            for (int variant = 0; variant < 2; ++variant) {
                for (int r = 0; r < K; ++r) {
                    const double t = cfg.t_grid.nodes[static_cast<std::size_t>(r)];
                    for (int k = 0; k < N; ++k)
                        mrow[static_cast<std::size_t>(k)] =
                            poisson_theta_factor(g.freq(k), t, variant == 1) * F.at(k);
                    for (int yi = 0; yi < Y; ++yi) {
                        const cplx* ph = ax.phases.data() + static_cast<std::size_t>(yi) * N;
                        cplx s(0.0, 0.0);
                        for (int k = 0; k < N; ++k) s += mrow[static_cast<std::size_t>(k)] * ph[k];
                        total += ax.weights[static_cast<std::size_t>(r) * Y + yi] * std::norm(s);
                    }
                }
            }
            out[pi] = std::sqrt(total);
        }
        return out;
    }

    // n == 2: contract axis 1 first, stream axis 0
    for (std::size_t pi = 0; pi < cfg.points.size(); ++pi) {
        GStarAxis ax0 = build_gstar_axis(g, cfg.t_grid, cfg.points[pi][0], lambda[0],
                                         cfg.gstar_window, stride);
        GStarAxis ax1 = build_gstar_axis(g, cfg.t_grid, cfg.points[pi][1], lambda[1],
                                         cfg.gstar_window, stride);
        const int Y0 = static_cast<int>(ax0.ys.size());
        const int Y1 = static_cast<int>(ax1.ys.size());
        const std::size_t Q1 = static_cast<std::size_t>(K) * Y1;

        double total = 0.0;
        std::vector<cplx> A(Q1 * static_cast<std::size_t>(N));
        std::vector<cplx> w1(static_cast<std::size_t>(N)), w0(static_cast<std::size_t>(N));
        for (int v1 = 0; v1 < 2; ++v1) {
            // A[(r1, y1)][k0] = sum_k1 F[k0][k1] Theta_{v1}(xi_1, t_1) phase(y1, k1)
            for (int r1 = 0; r1 < K; ++r1) {
                const double t1 = cfg.t_grid.nodes[static_cast<std::size_t>(r1)];
                for (int y1 = 0; y1 < Y1; ++y1) {
                    const cplx* ph = ax1.phases.data() + static_cast<std::size_t>(y1) * N;
                    for (int k = 0; k < N; ++k)
                        w1[static_cast<std::size_t>(k)] =
                            poisson_theta_factor(g.freq(k), t1, v1 == 1) * ph[k];
                    cplx* dst = A.data() + (static_cast<std::size_t>(r1) * Y1 + y1) * N;
                    for (int k0 = 0; k0 < N; ++k0) {
                        const cplx* frow = F.coefficients.data() + static_cast<std::size_t>(k0) * N;
                        cplx s(0.0, 0.0);
                        for (int k1 = 0; k1 < N; ++k1) s += frow[k1] * w1[static_cast<std::size_t>(k1)];
                        dst[k0] = s;
                    }
                }
            }
            for (int v0 = 0; v0 < 2; ++v0) {
                for (int r0 = 0; r0 < K; ++r0) {
                    const double t0 = cfg.t_grid.nodes[static_cast<std::size_t>(r0)];
                    for (int y0 = 0; y0 < Y0; ++y0) {
                        const cplx* ph = ax0.phases.data() + static_cast<std::size_t>(y0) * N;
                        for (int k = 0; k < N; ++k)
                            w0[static_cast<std::size_t>(k)] =
                                poisson_theta_factor(g.freq(k), t0, v0 == 1) * ph[k];
                        const double wgt0 = ax0.weights[static_cast<std::size_t>(r0) * Y0 + y0];
                        for (std::size_t q1 = 0; q1 < Q1; ++q1) {
                            const cplx* a = A.data() + q1 * static_cast<std::size_t>(N);
                            cplx s(0.0, 0.0);
                            for (int k0 = 0; k0 < N; ++k0)
                                s += w0[static_cast<std::size_t>(k0)] * a[k0];
                            total += wgt0 * ax1.weights[q1] * std::norm(s);
                        }
                    }
                }
            }
        }
        out[pi] = std::sqrt(total);
    }
    return out;
}

std::vector<double> mu_alpha_grid(const SampledField& f, const MultiIndex& alpha,
                                  const DyadicTGrid& tg) {
    auto tables = per_axis_tables(f.grid.dimension, alpha, [&](double a) {
        return detail::phi_axis_table(f.grid, a, tg);
    });
    SpectralField F = forward_fourier(f);
    auto sums = detail::accumulate_grid(F, tables, tg.weight());
    for (double& v : sums) v = std::sqrt(v);
    return sums;
}

std::vector<double> h_beta_grid(const SampledField& f, const MultiIndex& beta,
                                const DyadicTGrid& tg) {
    auto tables = per_axis_tables(f.grid.dimension, beta, [&](double b) {
        return tau_axis_table(f.grid, b, tg);
    });
    SpectralField F = forward_fourier(f);
    auto sums = detail::accumulate_grid(F, tables, tg.weight());
    for (double& v : sums) v = std::sqrt(v);
    return sums;
}

} // namespace msqf
