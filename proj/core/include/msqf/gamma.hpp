#ifndef MSQF_GAMMA_HPP
#define MSQF_GAMMA_HPP

#include <complex>

namespace msqf {

/// Principal-branch log Gamma for complex z (Lanczos sum, reflection for
/// Re z < 1/2). Imaginary part may differ from the continuous branch by a
/// multiple of 2 pi i; every consumer exponentiates, where that cancels.
/// Throws std::domain_error at the poles z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(z) = exp(log_gamma(z)).
std::complex<double> complex_gamma(std::complex<double> z);

/// log(sin(pi z)) with the large-|Im z| exponential factored out analytically.
std::complex<double> log_sin_pi(std::complex<double> z);

/// log(sinh x) and log(cosh x) for real x without overflow.
double log_sinh(double x);   // x > 0
double log_cosh(double x);

} // namespace msqf

#endif
