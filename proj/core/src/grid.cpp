#include "msqf/grid.hpp"

#include <cmath>
#include <string>

namespace msqf {

static bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

GridSpec::GridSpec(int n, double L, int N)
    : dimension(n), half_width(L), points_per_axis(N) {
    if (n < 1)
        throw std::invalid_argument("GridSpec: dimension must be >= 1");
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("GridSpec: half_width must be positive");
    if (N < 8 || !is_pow2(N))
        throw std::invalid_argument("GridSpec: points_per_axis must be a power of two >= 8");
}

std::size_t GridSpec::size() const {
    std::size_t s = 1;
    for (int i = 0; i < dimension; ++i) s *= static_cast<std::size_t>(points_per_axis);
    return s;
}

void require_finite(std::span<const cplx> v, const char* what) {
    for (const cplx& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

SampledField::SampledField(const GridSpec& g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw std::invalid_argument("SampledField: value count != N^n");
    require_finite(values, "SampledField");
}

SpectralField::SpectralField(const GridSpec& g, std::vector<cplx> c)
    : grid(g), coefficients(std::move(c)) {
    if (coefficients.size() != grid.size())
        throw std::invalid_argument("SpectralField: coefficient count != N^n");
    require_finite(coefficients, "SpectralField");
}

MultiIndex::MultiIndex(std::vector<double> c) : components(std::move(c)) {
    if (components.empty())
        throw std::invalid_argument("MultiIndex: empty");
    for (double v : components) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("MultiIndex: components must be positive reals");
    }
}

void MultiIndex::require_in(double lo, double hi, const char* what) const {
    for (double v : components) {
        if (!(v > lo) || !(v < hi))
            throw std::domain_error(std::string(what) + ": component out of range (" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + ")");
    }
}

} // namespace msqf
