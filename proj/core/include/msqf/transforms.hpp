#ifndef MSQF_TRANSFORMS_HPP
#define MSQF_TRANSFORMS_HPP

#include "msqf/grid.hpp"

#include <span>

namespace msqf {

/// Multiply a spectral field by per-axis factor tables (factors[axis][j],
/// wrapped index order). The tensor-product form of every operator here.
SpectralField spectral_multiply_axes(const SpectralField& F,
                                     std::span<const std::vector<cplx>> factors);

/// Hilbert transform on the listed axes: multiplier -i sgn(xi), sgn(0) = 0.
SampledField hilbert(const SampledField& f, std::span<const int> axes);
SampledField hilbert_all(const SampledField& f);

/// Riesz potential, per-axis multiplier |xi_j|^{-alpha_j}; the xi_j = 0 planes
/// are zeroed. Requires |fhat(0)| < 1e-10 max|fhat|.
SampledField riesz_potential(const SampledField& f, const MultiIndex& alpha);

/// S_t^alpha: per-axis multiplier phi_hat^{(alpha_j)}(t_j xi_j).
SampledField s_t_alpha(const SampledField& f, std::span<const double> t,
                       const MultiIndex& alpha);

/// tau_R^beta: per-axis multiplier beta (|xi|/R)(1 - |xi|/R)^{beta-1} on [-R, R].
/// For beta < 1 the node nearest |xi| = R carries the cell-averaged value.
SampledField tau_R_beta(const SampledField& f, std::span<const double> R,
                        const MultiIndex& beta);

/// Per-axis tau multiplier table over the wrapped frequency grid.
std::vector<cplx> tau_axis_multiplier(const GridSpec& g, double R, double beta);

/// Iterated Poisson extension: multiplier prod_j e^{-2 pi t_j |xi_j|}.
SampledField poisson_extension(const SampledField& f, std::span<const double> t);

enum class PoissonDeriv { dt, dy };

/// Derivatives of the Poisson extension: e^{-2 pi t_j |xi_j|} times
/// Theta_0 = -2 pi |xi_j| (d/dt) or Theta_1 = 2 pi i xi_j (d/dy) per axis.
SampledField poisson_partial(const SampledField& f, std::span<const double> t,
                             std::span<const PoissonDeriv> which);

/// First difference f(x - t) - f(x + t) on the listed axes (odd);
/// spectral factor -2 i sin(2 pi t xi).
SampledField delta_first(const SampledField& f, std::span<const double> t,
                         std::span<const int> axes);

/// Second difference f(x+t) + f(x-t) - 2 f(x); factor 2 cos(2 pi t xi) - 2.
SampledField delta_second(const SampledField& f, std::span<const double> t,
                          std::span<const int> axes);

/// Spectral antiderivative along every axis: fhat / prod(2 pi i xi_j), zero
/// planes dropped; valid for per-axis mean-zero fields.
SampledField antiderivative(const SampledField& f);

/// f(x - a) via spectral phase.
SampledField shift(const SampledField& f, std::span<const double> a);

/// f(2^k x), k >= 1, exact for band-limited fields (spectral index map).
SampledField dilate_pow2(const SampledField& f, int log2r);

} // namespace msqf

#endif
