#include "msqf/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace msqf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrtTwoPi = 0.91893853320467274178;  // ln sqrt(2 pi)

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
constexpr double kG = 4.7421875;
constexpr double kC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

std::complex<double> lanczos_log_gamma(std::complex<double> z) {
    // valid for Re z >= 0.5
    std::complex<double> sum(kC[0], 0.0);
    for (int k = 1; k < 15; ++k) sum += kC[k] / (z + static_cast<double>(k - 1));
    const std::complex<double> t = z + (kG - 0.5);
    return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

bool is_nonpositive_integer(std::complex<double> z) {
    if (z.imag() != 0.0) return false;
    const double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

} // namespace

std::complex<double> log_sin_pi(std::complex<double> z) {
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); factor out the growing side.
    const std::complex<double> ipiz(-kPi * z.imag(), kPi * z.real());
    const std::complex<double> log_2i(std::log(2.0), kPi / 2.0);
    if (z.imag() >= 0.0) {
        // e^{i pi z} decays; sin = -e^{-i pi z}(1 - e^{2 i pi z})/(2i)
        const std::complex<double> log1m = std::log(1.0 - std::exp(2.0 * ipiz));
        // -1/(2i) = e^{i pi/2}/2: log(-1/(2i)) = i pi/2 - log 2
        return -ipiz + log1m + std::complex<double>(-std::log(2.0), kPi / 2.0);
    }
    const std::complex<double> log1m = std::log(1.0 - std::exp(-2.0 * ipiz));
    return ipiz + log1m - log_2i;
}

std::complex<double> log_gamma(std::complex<double> z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

std::complex<double> complex_gamma(std::complex<double> z) {
    return std::exp(log_gamma(z));
}

double log_sinh(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_sinh: requires x > 0");
    // sinh x = e^x (1 - e^{-2x}) / 2
    return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
}

double log_cosh(double x) {
    const double a = std::abs(x);
    return a - std::log(2.0) + std::log1p(std::exp(-2.0 * a));
}

} // namespace msqf
