#ifndef MSQF_KERNELS_HPP
#define MSQF_KERNELS_HPP

#include "msqf/grid.hpp"

#include <span>
#include <string>

namespace msqf {

/// phi^(alpha)(x) = alpha |1-|x||^{alpha-1} (chi_[0,1] - chi_[-1,0])(x).
/// Throws at x = +-1 when alpha < 1 (non-integrable point values).
double phi_alpha(double alpha, double x);

/// Fourier transform of phi^(alpha); purely imaginary and odd in xi.
cplx phi_alpha_hat(double alpha, double xi);

/// F_beta(u) = 2 beta int_0^1 (1-t)^{beta-1} t sin(2 pi u t) dt.
double f_beta(double beta, double u);

/// Fractional-difference kernel, 0 < alpha < 1:
/// k_alpha(x) = 2 (2pi)^{alpha-1} Gamma(1-alpha) cos((1-alpha) pi/2)
///              (|1-x|^{alpha-1} - |1+x|^{alpha-1}).
double k_alpha_frac(double alpha, double x);

/// Prefactor 2 (2pi)^{alpha-1} Gamma(1-alpha) cos((1-alpha) pi/2) of k_alpha.
double k_alpha_prefactor(double alpha);

/// Product Poisson kernel prod_i t_i / (pi (x_i^2 + t_i^2)).
double poisson_kernel(std::span<const double> t, std::span<const double> x);

// --- per-axis multiplier factors (log-space evaluation) ---

/// Gamma(alpha+1) Gamma(1 - 2 pi i xi) / Gamma(alpha+1 - 2 pi i xi).
cplx kalpha_factor(double alpha, double xi);

/// (2pi)^{2 pi i xi + 1} i Gamma(beta+1) xi / (2 Gamma(beta + 2 pi i xi + 1) sin(pi^2 i xi)),
/// removable singularity at xi = 0 filled with the limit 1/pi.
cplx abeta_factor(double beta, double xi);

/// 4 (2pi)^{alpha-1} Gamma(1 - 2 pi i xi) sin(-pi^2 i xi + pi/2)
///   Gamma(-alpha + 2 pi i xi) sin(pi^2 i xi - alpha pi/2),  0 < alpha < 1.
cplx jalpha_factor(double alpha, double xi);

/// pi xi / sinh(pi^2 xi), limit 1/pi at 0; real and even.
double g0_factor(double xi);

// direct (non-log-space) variants, usable where the raw factors fit in double
cplx kalpha_factor_direct(double alpha, double xi);
cplx abeta_factor_direct(double beta, double xi);
cplx jalpha_factor_direct(double alpha, double xi);
cplx g0_factor_direct(double xi);

// --- tensor products over axes ---

cplx mult_K_alpha_hat(const MultiIndex& alpha, std::span<const double> xi);
cplx mult_A_beta(const MultiIndex& beta, std::span<const double> xi);
cplx mult_J_alpha_hat(const MultiIndex& alpha, std::span<const double> xi);
cplx mult_G0_hat(std::span<const double> xi);

/// Closed-form multiplier with its decay envelope, as a named object the CLI
/// can tabulate.
struct MultiplierProfile {
    enum class Kind { k_alpha_hat, a_beta, j_alpha_hat, g0_hat, phi_hat };

    Kind kind = Kind::k_alpha_hat;
    MultiIndex params;   // ignored for g0_hat

    static MultiplierProfile parse(const std::string& name, const MultiIndex& params);

    std::string name() const;
    cplx evaluate(std::span<const double> xi) const;
    /// Asymptotic modulus envelope; evaluate()/envelope() stays in a positive bracket.
    double envelope(std::span<const double> xi) const;
};

/// |(t - ix)^{-alpha} - (2pi)^alpha / Gamma(alpha) *
///   int_0^inf u^{alpha-1} e^{-2 pi u t} e^{2 pi i x u} du|.
double lemma1_residual(double alpha, double t, double x);

/// Deterministic table of phi_alpha_hat over a fixed argument list.
struct PhiHatTable {
    double alpha = 0.0;
    std::vector<double> args;
    std::vector<double> imag_values;   // phi_hat(arg) = i * imag_values

    PhiHatTable() = default;
    PhiHatTable(double alpha, std::vector<double> arguments);
};

} // namespace msqf

#endif
