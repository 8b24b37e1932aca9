#ifndef MSQF_FFT_HPP
#define MSQF_FFT_HPP

#include "msqf/grid.hpp"

namespace msqf {

/// Radix-2 power-of-two FFT with a precomputed root table.
/// Plans are immutable after construction and safe for concurrent use.
class FftPlan {
  public:
    explicit FftPlan(int n);

    int length() const { return n_; }

    /// Unscaled DFT: a[j] <- sum_m a[m] exp(-2 pi i m j / N).
    void forward(cplx* a) const;
    /// Unscaled inverse DFT: a[m] <- sum_j a[j] exp(+2 pi i m j / N).
    void inverse(cplx* a) const;

  private:
    void transform(cplx* a, bool conj_roots) const;

    int n_;
    std::vector<cplx> roots_;     // exp(-2 pi i k / N), k < N/2
    std::vector<int> bitrev_;
};

/// Continuous-transform approximation: coefficients ~ fhat(xi_k) under the
/// e^{-2 pi i x xi} convention (Riemann sum with the grid phase folded in).
SpectralField forward_fourier(const SampledField& f);

/// Inverse of forward_fourier; exact round trip up to rounding.
SampledField inverse_fourier(const SpectralField& F);

/// In-place helpers on raw buffers (row-major, n in {1,2}).
/// data is interpreted on `grid`; scale factors are NOT applied.
void dft_nd(const GridSpec& grid, cplx* data, bool inverse);

} // namespace msqf

#endif
