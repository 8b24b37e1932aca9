#include "msqf/fft.hpp"

#include <cmath>
#include <numbers>

namespace msqf {

FftPlan::FftPlan(int n) : n_(n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("FftPlan: length must be a power of two >= 2");
    roots_.resize(static_cast<std::size_t>(n / 2));
    const double step = -2.0 * std::numbers::pi / n;
    for (int k = 0; k < n / 2; ++k)
        roots_[static_cast<std::size_t>(k)] = cplx(std::cos(step * k), std::sin(step * k));
    bitrev_.resize(static_cast<std::size_t>(n));
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < log2n; ++b) r |= ((i >> b) & 1) << (log2n - 1 - b);
        bitrev_[static_cast<std::size_t>(i)] = r;
    }
}

void FftPlan::transform(cplx* a, bool conj_roots) const {
    const int n = n_;
    for (int i = 0; i < n; ++i) {
        int r = bitrev_[static_cast<std::size_t>(i)];
        if (i < r) std::swap(a[i], a[r]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len >> 1;
        const int stride = n / len;
        for (int base = 0; base < n; base += len) {
            for (int k = 0; k < half; ++k) {
                cplx w = roots_[static_cast<std::size_t>(k * stride)];
                if (conj_roots) w = std::conj(w);
                const cplx u = a[base + k];
                const cplx t = a[base + k + half] * w;
                a[base + k] = u + t;
                a[base + k + half] = u - t;
            }
        }
    }
}

void FftPlan::forward(cplx* a) const { transform(a, false); }
void FftPlan::inverse(cplx* a) const { transform(a, true); }

void dft_nd(const GridSpec& grid, cplx* data, bool inverse) {
    const int n = grid.dimension;
    const int N = grid.points_per_axis;
    FftPlan plan(N);
    if (n == 1) {
        if (inverse) plan.inverse(data); else plan.forward(data);
        return;
    }
    if (n == 2) {
        // rows (axis 1 contiguous)
        for (int r = 0; r < N; ++r) {
            cplx* row = data + static_cast<std::size_t>(r) * N;
            if (inverse) plan.inverse(row); else plan.forward(row);
        }
        // columns
        std::vector<cplx> col(static_cast<std::size_t>(N));
        for (int c = 0; c < N; ++c) {
            for (int r = 0; r < N; ++r) col[static_cast<std::size_t>(r)] = data[static_cast<std::size_t>(r) * N + c];
            if (inverse) plan.inverse(col.data()); else plan.forward(col.data());
            for (int r = 0; r < N; ++r) data[static_cast<std::size_t>(r) * N + c] = col[static_cast<std::size_t>(r)];
        }
        return;
    }
    throw std::invalid_argument("dft_nd: only n in {1,2} supported");
}

namespace {

// (-1)^(j1+...+jn) phase that recenters the grid at -L.
void apply_alternating_sign(const GridSpec& grid, cplx* data) {
    const int N = grid.points_per_axis;
    if (grid.dimension == 1) {
        for (int j = 1; j < N; j += 2) data[j] = -data[j];
    } else {
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                if ((r + c) & 1) data[static_cast<std::size_t>(r) * N + c] = -data[static_cast<std::size_t>(r) * N + c];
    }
}

} // namespace

// With x_m = -L + m h and xi_j = s(j)/(2L):
//   fhat(xi_j) = h (-1)^j DFT(f)_j,   f(x_m) = (1/2L) IDFT_u((-1)^j c_j)_m.
SpectralField forward_fourier(const SampledField& f) {
    require_finite(f.values, "forward_fourier");
    const GridSpec& g = f.grid;
    std::vector<cplx> buf = f.values;
    dft_nd(g, buf.data(), false);
    apply_alternating_sign(g, buf.data());
    double scale = 1.0;
    for (int i = 0; i < g.dimension; ++i) scale *= g.spacing();
    for (cplx& z : buf) z *= scale;
    SpectralField F;
    F.grid = g;
    F.coefficients = std::move(buf);
    return F;
}

SampledField inverse_fourier(const SpectralField& F) {
    require_finite(F.coefficients, "inverse_fourier");
    const GridSpec& g = F.grid;
    std::vector<cplx> buf = F.coefficients;
    apply_alternating_sign(g, buf.data());
    dft_nd(g, buf.data(), true);
    double scale = 1.0;
    for (int i = 0; i < g.dimension; ++i) scale *= g.xi_spacing();
    for (cplx& z : buf) z *= scale;
    SampledField f;
    f.grid = g;
    f.values = std::move(buf);
    return f;
}

} // namespace msqf
