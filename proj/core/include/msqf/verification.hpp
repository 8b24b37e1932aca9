#ifndef MSQF_VERIFICATION_HPP
#define MSQF_VERIFICATION_HPP

#include "msqf/families.hpp"
#include "msqf/square_functions.hpp"

#include <cstdint>
#include <string>

namespace msqf {

struct ReportPoint {
    std::vector<double> x;   // coordinates; meaning depends on the check
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct ReportSummary {
    double min = 0.0;
    double max = 0.0;
    double spread = 0.0;         // max/min over admissible ratios
    double residual_max = 0.0;
};

/// Per-check record; pass is a pure function of summary vs tolerance.
struct VerificationReport {
    std::string theorem;
    std::string family;
    std::vector<ReportPoint> points;
    ReportSummary summary;
    double tolerance = 0.0;
    bool pass = false;

    void finalize_ratio_summary(double spread_tol);
};

/// Gates shared by the pointwise-equivalence checks.
struct CheckOptions {
    double spread_tol = 20.0;      // admissible C/c
    double stability_tol = 0.10;   // relative spread drift under m -> 2m
    double denom_floor = 1e-6;     // exclusion threshold relative to the side max
    double dilation_tol = 1e-3;
};

// --- pointwise equivalence surrogates ---

VerificationReport check_theorem1(const TestFamily& fam, const MultiIndex& lambda,
                                  const SquareFunctionConfig& cfg,
                                  const CheckOptions& opt = {});

VerificationReport check_theorem2(const TestFamily& fam, const MultiIndex& alpha,
                                  const SquareFunctionConfig& cfg,
                                  const CheckOptions& opt = {});

VerificationReport check_theorem3(const TestFamily& fam, const MultiIndex& alpha,
                                  const SquareFunctionConfig& cfg,
                                  const CheckOptions& opt = {});

VerificationReport check_theorem5(const TestFamily& fam, const MultiIndex& alpha,
                                  const SquareFunctionConfig& cfg,
                                  const CheckOptions& opt = {});

/// ||h_beta f||_p / ||f||_p and mu ratios over the family, p > 1 only.
VerificationReport check_theorem4_lp(const TestFamily& fam, const MultiIndex& beta,
                                     const MultiIndex& alpha,
                                     const std::vector<double>& p_list,
                                     const DyadicTGrid& tg, std::uint64_t seed);

/// Weak-type L(log L)^{n-1} surrogate; lambda grid log-spaced over
/// [1e-3, 1e2] * max mu.
VerificationReport check_theorem6_weak_type(const TestFamily& fam,
                                            const MultiIndex& alpha,
                                            const DyadicTGrid& tg,
                                            int lambda_count = 25);

// --- two-route Plancherel bridges ---

struct BridgeConfig {
    double window = 20.0;   // X: log-variable half-width
    int psi_points = 4096;  // M per axis (power of two)
    DyadicTGrid t_grid;     // route-A quadrature
    double tolerance = 5e-3;

    static BridgeConfig defaults(int dimension);
};

VerificationReport check_plancherel_bridge_mu(const SampledField& f, const MultiIndex& alpha,
                                              const std::vector<int>& x0_index,
                                              const BridgeConfig& cfg);
VerificationReport check_plancherel_bridge_h(const SampledField& f, const MultiIndex& beta,
                                             const std::vector<int>& x0_index,
                                             const BridgeConfig& cfg);
VerificationReport check_g0_bridge(const SampledField& f, const std::vector<int>& x0_index,
                                   const BridgeConfig& cfg);

// --- lemma-level certificates ---

VerificationReport check_lemma1(std::uint64_t seed, int samples = 20);
VerificationReport check_lemma4_gamma_asymptotic();
VerificationReport check_orlicz_phi_axioms(int a, std::uint64_t seed);
VerificationReport check_kernel_decay(const std::vector<double>& alphas, double u_max = 100.0);

/// Bracket check of one multiplier's modulus against its decay envelope.
VerificationReport check_multiplier_asymptotics(const std::string& name,
                                                const MultiIndex& params,
                                                double xi_max);

/// |delta_t(I_alpha f)(x) - t^{alpha-1} int_0^inf (f(x-y)-f(x+y)) k_alpha(y/t) dy|,
/// n = 1, relative to the field scale.
double lemma5_residual(const SampledField& f, double alpha, int x_index, double t);

/// mu_alpha(f) vs the second-difference route at alpha = 1 (two-representation
/// identity); returns max relative deviation over the configured points.
double mu_two_representation_deviation(const SampledField& f,
                                       const SquareFunctionConfig& cfg);

} // namespace msqf

#endif
