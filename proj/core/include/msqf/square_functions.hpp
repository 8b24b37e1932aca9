#ifndef MSQF_SQUARE_FUNCTIONS_HPP
#define MSQF_SQUARE_FUNCTIONS_HPP

#include "msqf/grid.hpp"
#include "msqf/quadrature.hpp"

#include <span>

namespace msqf {

/// Discretization of the outer integrals: one dyadic grid per axis, a fixed
/// list of evaluation points (grid indices), and the g* window controls.
struct SquareFunctionConfig {
    DyadicTGrid t_grid;
    std::vector<std::vector<int>> points;   // grid index per axis
    double gstar_window = 8.0;              // y half-width W per axis
    int gstar_y_stride = 1;                 // y lattice stride in grid cells

    static SquareFunctionConfig defaults(const GridSpec& g);

    SquareFunctionConfig with_t_grid(const DyadicTGrid& tg) const {
        SquareFunctionConfig c = *this;
        c.t_grid = tg;
        return c;
    }
    SquareFunctionConfig with_points(std::vector<std::vector<int>> pts) const {
        SquareFunctionConfig c = *this;
        c.points = std::move(pts);
        return c;
    }
    void validate(const GridSpec& g) const;
};

namespace detail {

/// Per-axis multiplier rows: rows * N complex entries, row-major.
struct AxisTable {
    int rows = 0;
    int n = 0;
    std::vector<cplx> m;

    cplx* row(int r) { return m.data() + static_cast<std::size_t>(r) * n; }
    const cplx* row(int r) const { return m.data() + static_cast<std::size_t>(r) * n; }
};

/// sum over row tuples of w^n |S(rows, p)|^2 at each listed point, where
/// S = inverse transform of the axis-multiplied spectrum evaluated at p.
std::vector<double> accumulate_points(const SpectralField& F,
                                      std::span<const AxisTable> tables,
                                      double axis_weight,
                                      std::span<const std::vector<int>> pts);

/// Same reduction over the whole spatial grid (row-major output).
std::vector<double> accumulate_grid(const SpectralField& F,
                                    std::span<const AxisTable> tables,
                                    double axis_weight);

/// phi_hat^{(alpha)}(t_r xi_k) table over a dyadic grid.
AxisTable phi_axis_table(const GridSpec& g, double alpha, const DyadicTGrid& tg);

} // namespace detail

/// Generalized Marcinkiewicz integral (sum over the t grid of w |S_t f|^2)^{1/2}.
std::vector<double> mu_alpha(const SampledField& f, const MultiIndex& alpha,
                             const SquareFunctionConfig& cfg);

/// mu_1 through the second-difference form: |Delta_t of the antiderivative| / t
/// per axis. Mean-zero fields only; independent route for the alpha = 1 identity.
std::vector<double> mu_via_differences(const SampledField& f,
                                       const SquareFunctionConfig& cfg);

/// h_beta: outer dR/R quadrature of |tau_R^beta f|^2.
std::vector<double> h_beta(const SampledField& f, const MultiIndex& beta,
                           const SquareFunctionConfig& cfg);

/// D_alpha: differences of the Riesz potential, weight t^{-2 alpha} dt/t.
std::vector<double> d_alpha(const SampledField& f, const MultiIndex& alpha,
                            const SquareFunctionConfig& cfg);

/// g*_lambda by direct (y, t) quadrature over a window; n <= 2.
std::vector<double> g_star_lambda(const SampledField& f, const MultiIndex& lambda,
                                  const SquareFunctionConfig& cfg);

/// g_0: pure spatial mixed derivative of the Poisson extension, weight t dt.
std::vector<double> g0(const SampledField& f, const SquareFunctionConfig& cfg);

// full-grid variants (distribution functions, L^p norms)
std::vector<double> mu_alpha_grid(const SampledField& f, const MultiIndex& alpha,
                                  const DyadicTGrid& tg);
std::vector<double> h_beta_grid(const SampledField& f, const MultiIndex& beta,
                                const DyadicTGrid& tg);

} // namespace msqf

#endif
