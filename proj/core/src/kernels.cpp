#include "msqf/kernels.hpp"

#include "msqf/gamma.hpp"
#include "msqf/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace msqf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

// J(z) = int_0^1 s^{alpha-1} e^{-z s} ds evaluated at z = 2 pi i w.
// Three regimes: Taylor series (small |z|), tanh-sinh quadrature (middle),
// incomplete-gamma asymptotics (large |z|). The middle band exists because
// both series run into cancellation for purely imaginary z of moderate size.
cplx laplace_moment(double alpha, double w) {
    const double az = kTwoPi * std::abs(w);
    const cplx z(0.0, kTwoPi * w);
    if (az <= 4.0) {
        // sum_k (-z)^k / (k! (alpha + k))
        cplx sum(1.0 / alpha, 0.0);
        cplx term(1.0, 0.0);
        for (int k = 1; k <= 60; ++k) {
            term *= -z / static_cast<double>(k);
            const cplx add = term / (alpha + k);
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }
    if (az <= 52.0) {
        return tanh_sinh(
            [&](double s) {
                return std::pow(s, alpha - 1.0) *
                       cplx(std::cos(kTwoPi * w * s), -std::sin(kTwoPi * w * s));
            },
            0.0, 1.0, 1e-14, 12);
    }
    // Gamma(alpha) z^{-alpha} - e^{-z} z^{-1} sum_k c_k z^{-k}, c_k = c_{k-1}(alpha-k)
    const double half_pi = 0.5 * kPi;
    const cplx log_z(std::log(az), w > 0 ? half_pi : -half_pi);
    const cplx lead = std::exp(log_gamma(cplx(alpha, 0.0)) - alpha * log_z);
    cplx sum(1.0, 0.0);
    cplx term(1.0, 0.0);
    double last = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= (alpha - k) / z;
        const double mag = std::abs(term);
        if (mag >= last) break;   // asymptotic tail starts growing
        sum += term;
        last = mag;
        if (mag < 1e-18 * std::abs(sum)) break;
    }
    const cplx expz(std::cos(kTwoPi * w), -std::sin(kTwoPi * w));   // e^{-z}
    return lead - expz * sum / z;
}

// Im of e^{2 pi i w} J(2 pi i w); phi_hat and f_beta reduce to this.
double oscillatory_im(double alpha, double w, bool with_linear_factor) {
    const cplx rot(std::cos(kTwoPi * w), std::sin(kTwoPi * w));
    cplx j = laplace_moment(alpha, w);
    if (with_linear_factor) j -= laplace_moment(alpha + 1.0, w);
    return (rot * j).imag();
}

} // namespace

double phi_alpha(double alpha, double x) {
    if (!(alpha > 0.0)) throw std::domain_error("phi_alpha: alpha must be > 0");
    const double ax = std::abs(x);
    if (ax > 1.0) return 0.0;
    if (ax == 1.0 && alpha < 1.0)
        throw std::domain_error("phi_alpha: singular point |x| = 1 for alpha < 1");
    const double sgn = (x > 0.0) ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    if (sgn == 0.0) return 0.0;
    return sgn * alpha * std::pow(1.0 - ax, alpha - 1.0);
}

cplx phi_alpha_hat(double alpha, double xi) {
    if (!(alpha > 0.0)) throw std::domain_error("phi_alpha_hat: alpha must be > 0");
    if (xi == 0.0) return cplx(0.0, 0.0);
    // phi odd: phi_hat(xi) = -2 i alpha Im int_0^1 (1-x)^{alpha-1} e^{2 pi i xi x} dx
    //                      = -2 i alpha Im [ e^{2 pi i xi} J(2 pi i xi) ]
    return cplx(0.0, -2.0 * alpha * oscillatory_im(alpha, xi, false));
}

double f_beta(double beta, double u) {
    if (!(beta > 0.0)) throw std::domain_error("f_beta: beta must be > 0");
    if (u == 0.0) return 0.0;
    // 2 beta Im [ e^{2 pi i u} (J_beta - J_{beta+1})(2 pi i u) ]
    return 2.0 * beta * oscillatory_im(beta, u, true);
}

double k_alpha_prefactor(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("k_alpha_prefactor: alpha must be in (0,1)");
    return 2.0 * std::pow(kTwoPi, alpha - 1.0) * std::exp(std::lgamma(1.0 - alpha)) *
           std::cos((1.0 - alpha) * kPi / 2.0);
}

double k_alpha_frac(double alpha, double x) {
    if (std::abs(x) == 1.0)
        throw std::domain_error("k_alpha_frac: singular point |x| = 1");
    const double c = k_alpha_prefactor(alpha);
    return c * (std::pow(std::abs(1.0 - x), alpha - 1.0) -
                std::pow(std::abs(1.0 + x), alpha - 1.0));
}

double poisson_kernel(std::span<const double> t, std::span<const double> x) {
    if (t.size() != x.size())
        throw std::invalid_argument("poisson_kernel: dimension mismatch");
    double p = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 0.0)) throw std::domain_error("poisson_kernel: t_i must be > 0");
        p *= t[i] / (kPi * (x[i] * x[i] + t[i] * t[i]));
    }
    return p;
}

cplx kalpha_factor(double alpha, double xi) {
    if (!(alpha > 0.0)) throw std::domain_error("kalpha_factor: alpha must be > 0");
    const cplx two_pi_i_xi(0.0, kTwoPi * xi);
    return std::exp(log_gamma(cplx(alpha + 1.0, 0.0)) + log_gamma(1.0 - two_pi_i_xi) -
                    log_gamma(cplx(alpha + 1.0, 0.0) - two_pi_i_xi));
}

cplx kalpha_factor_direct(double alpha, double xi) {
    const cplx two_pi_i_xi(0.0, kTwoPi * xi);
    return complex_gamma(cplx(alpha + 1.0, 0.0)) * complex_gamma(1.0 - two_pi_i_xi) /
           complex_gamma(cplx(alpha + 1.0, 0.0) - two_pi_i_xi);
}

namespace {

// xi / sinh(pi^2 xi) * pi^2, i.e. the even removable-singularity core, Taylor
// form for |xi| below the switch point.
double sinh_ratio_core(double xi) {
    const double y = kPi2 * xi;
    if (std::abs(xi) < 1e-4) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 + 7.0 * y2 * y2 / 360.0;
    }
    return y / std::sinh(y);
}

} // namespace

cplx abeta_factor(double beta, double xi) {
    if (!(beta > 0.0)) throw std::domain_error("abeta_factor: beta must be > 0");
    const cplx two_pi_i_xi(0.0, kTwoPi * xi);
    // common analytic part (2pi)^{2 pi i xi + 1} Gamma(beta+1) / (2 Gamma(beta + 2 pi i xi + 1))
    const cplx log_pre = (two_pi_i_xi + 1.0) * std::log(kTwoPi) +
                         log_gamma(cplx(beta + 1.0, 0.0)) - std::log(2.0) -
                         log_gamma(cplx(beta + 1.0, 0.0) + two_pi_i_xi);
    if (std::abs(xi) < 1e-4)
        return std::exp(log_pre) * (sinh_ratio_core(xi) / kPi2);
    // xi / sinh(pi^2 xi) > 0 for all real xi
    const double log_ratio = std::log(std::abs(xi)) - log_sinh(kPi2 * std::abs(xi));
    return std::exp(log_pre + log_ratio);
}

cplx abeta_factor_direct(double beta, double xi) {
    const cplx i(0.0, 1.0);
    const cplx two_pi_i_xi(0.0, kTwoPi * xi);
    if (xi == 0.0) return cplx(1.0 / kPi, 0.0);
    return std::pow(cplx(kTwoPi, 0.0), two_pi_i_xi + 1.0) * i *
           complex_gamma(cplx(beta + 1.0, 0.0)) * xi /
           (2.0 * complex_gamma(cplx(beta + 1.0, 0.0) + two_pi_i_xi) *
            std::sin(cplx(0.0, kPi2 * xi)));
}

cplx jalpha_factor(double alpha, double xi) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("jalpha_factor: alpha must be in (0,1)");
    const cplx two_pi_i_xi(0.0, kTwoPi * xi);
    const double ay = kPi2 * std::abs(xi);
    const double sgn = (xi > 0.0) ? 1.0 : (xi < 0.0 ? -1.0 : 0.0);
    const double em = std::exp(-2.0 * ay);
    // sin(pi^2 i xi - alpha pi/2) = (e^{pi^2|xi|}/2) *
    //   [ i sgn(xi)(1 - e^{-2 pi^2|xi|}) cos(a pi/2) - (1 + e^{-2 pi^2|xi|}) sin(a pi/2) ]
    const cplx bracket(-(1.0 + em) * std::sin(alpha * kPi / 2.0),
                       sgn * (1.0 - em) * std::cos(alpha * kPi / 2.0));
    const cplx log_sin_term = cplx(ay - std::log(2.0), 0.0) + std::log(bracket);
    const cplx w = std::log(4.0) + (alpha - 1.0) * std::log(kTwoPi) +
                   log_gamma(1.0 - two_pi_i_xi) + log_cosh(kPi2 * xi) +
                   log_gamma(cplx(-alpha, 0.0) + two_pi_i_xi) + log_sin_term;
    return std::exp(w);
}

cplx jalpha_factor_direct(double alpha, double xi) {
    const cplx two_pi_i_xi(0.0, kTwoPi * xi);
    const cplx s1 = std::sin(cplx(kPi / 2.0, -kPi2 * xi));
    const cplx s2 = std::sin(cplx(-alpha * kPi / 2.0, kPi2 * xi));
    return 4.0 * std::pow(kTwoPi, alpha - 1.0) * complex_gamma(1.0 - two_pi_i_xi) * s1 *
           complex_gamma(cplx(-alpha, 0.0) + two_pi_i_xi) * s2;
}

double g0_factor(double xi) {
    return sinh_ratio_core(xi) / kPi;
}

cplx g0_factor_direct(double xi) {
    if (xi == 0.0) return cplx(1.0 / kPi, 0.0);
    const cplx i(0.0, 1.0);
    return -kPi * i * xi / std::sin(cplx(0.0, -kPi2 * xi));
}

cplx mult_K_alpha_hat(const MultiIndex& alpha, std::span<const double> xi) {
    if (static_cast<std::size_t>(alpha.dimension()) != xi.size())
        throw std::invalid_argument("mult_K_alpha_hat: dimension mismatch");
    cplx p(1.0, 0.0);
    for (std::size_t j = 0; j < xi.size(); ++j) p *= kalpha_factor(alpha[static_cast<int>(j)], xi[j]);
    return p;
}

cplx mult_A_beta(const MultiIndex& beta, std::span<const double> xi) {
    if (static_cast<std::size_t>(beta.dimension()) != xi.size())
        throw std::invalid_argument("mult_A_beta: dimension mismatch");
    cplx p(1.0, 0.0);
    for (std::size_t j = 0; j < xi.size(); ++j) p *= abeta_factor(beta[static_cast<int>(j)], xi[j]);
    return p;
}

cplx mult_J_alpha_hat(const MultiIndex& alpha, std::span<const double> xi) {
    if (static_cast<std::size_t>(alpha.dimension()) != xi.size())
        throw std::invalid_argument("mult_J_alpha_hat: dimension mismatch");
    cplx p(1.0, 0.0);
    for (std::size_t j = 0; j < xi.size(); ++j) p *= jalpha_factor(alpha[static_cast<int>(j)], xi[j]);
    return p;
}

cplx mult_G0_hat(std::span<const double> xi) {
    cplx p(1.0, 0.0);
    for (double x : xi) p *= g0_factor(x);
    return p;
}

MultiplierProfile MultiplierProfile::parse(const std::string& name, const MultiIndex& params) {
    MultiplierProfile p;
    p.params = params;
    if (name == "Kalpha") p.kind = Kind::k_alpha_hat;
    else if (name == "Abeta") p.kind = Kind::a_beta;
    else if (name == "Jalpha") p.kind = Kind::j_alpha_hat;
    else if (name == "G0") p.kind = Kind::g0_hat;
    else if (name == "phi-hat") p.kind = Kind::phi_hat;
    else throw std::invalid_argument("MultiplierProfile: unknown name " + name);
    if (p.kind == Kind::j_alpha_hat) params.require_in(0.0, 1.0, "Jalpha");
    return p;
}

std::string MultiplierProfile::name() const {
    switch (kind) {
        case Kind::k_alpha_hat: return "Kalpha";
        case Kind::a_beta: return "Abeta";
        case Kind::j_alpha_hat: return "Jalpha";
        case Kind::g0_hat: return "G0";
        case Kind::phi_hat: return "phi-hat";
    }
    return "?";
}

cplx MultiplierProfile::evaluate(std::span<const double> xi) const {
    switch (kind) {
        case Kind::k_alpha_hat: return mult_K_alpha_hat(params, xi);
        case Kind::a_beta: return mult_A_beta(params, xi);
        case Kind::j_alpha_hat: return mult_J_alpha_hat(params, xi);
        case Kind::g0_hat: return mult_G0_hat(xi);
        case Kind::phi_hat: {
            cplx p(1.0, 0.0);
            for (std::size_t j = 0; j < xi.size(); ++j)
                p *= phi_alpha_hat(params[static_cast<int>(j)], xi[j]);
            return p;
        }
    }
    return cplx(0.0, 0.0);
}

double MultiplierProfile::envelope(std::span<const double> xi) const {
    double e = 1.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        const double a = std::abs(xi[j]);
        switch (kind) {
            case Kind::k_alpha_hat:
            case Kind::j_alpha_hat:
                e *= std::pow(1.0 + a, -params[static_cast<int>(j)]);
                break;
            case Kind::a_beta:
                e *= std::pow(1.0 + a, 0.5 - params[static_cast<int>(j)]);
                break;
            case Kind::g0_hat:
                e *= (1.0 + a) * std::exp(-kPi2 * a);
                break;
            case Kind::phi_hat: {
                const double d = std::min(1.0, params[static_cast<int>(j)]);
                e *= (a == 0.0) ? 1.0 : std::min(a, std::pow(a, -d));
                break;
            }
        }
    }
    return e;
}

double lemma1_residual(double alpha, double t, double x) {
    if (!(alpha > 0.0)) throw std::domain_error("lemma1_residual: alpha must be > 0");
    if (!(t > 0.0)) throw std::domain_error("lemma1_residual: t must be > 0");
    const cplx lhs = std::exp(-alpha * std::log(cplx(t, -x)));
    const cplx integral = exp_sinh(
        [&](double u) -> cplx {
            const double me = (alpha - 1.0) * std::log(u) - kTwoPi * u * t;
            if (me < -745.0) return cplx(0.0, 0.0);
            const double mag = std::exp(me);
            return mag * cplx(std::cos(kTwoPi * x * u), std::sin(kTwoPi * x * u));
        },
        1.0 / (kTwoPi * t), 1e-14, 12);
    const cplx rhs = std::pow(kTwoPi, alpha) / complex_gamma(cplx(alpha, 0.0)) * integral;
    return std::abs(lhs - rhs);
}

PhiHatTable::PhiHatTable(double a, std::vector<double> arguments)
    : alpha(a), args(std::move(arguments)) {
    imag_values.resize(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        imag_values[i] = phi_alpha_hat(alpha, args[i]).imag();
}

} // namespace msqf
