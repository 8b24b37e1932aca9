#ifndef MSQF_GRID_HPP
#define MSQF_GRID_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace msqf {

using cplx = std::complex<double>;

/// Uniform periodicized grid over [-L, L)^n with dual frequency grid
/// xi_k = k/(2L), k in {-N/2, ..., N/2 - 1} per axis.
struct GridSpec {
    int dimension = 1;
    double half_width = 16.0;     // L
    int points_per_axis = 1024;   // N, power of two, >= 8

    GridSpec() = default;
    GridSpec(int n, double L, int N);

    double spacing() const { return 2.0 * half_width / points_per_axis; }          // h
    double xi_spacing() const { return 1.0 / (2.0 * half_width); }                 // dual step
    double nyquist() const { return points_per_axis / (4.0 * half_width); }        // N/(4L)
    std::size_t size() const;                                                      // N^n

    /// Spatial coordinate of index m in {0,...,N-1}: x_m = -L + m h.
    double coord(int m) const { return -half_width + m * spacing(); }

    /// Signed frequency index of wrapped DFT index j in {0,...,N-1}.
    int signed_index(int j) const {
        return j < points_per_axis / 2 ? j : j - points_per_axis;
    }
    /// Frequency node of wrapped DFT index j.
    double freq(int j) const { return signed_index(j) * xi_spacing(); }

    bool operator==(const GridSpec&) const = default;
};

/// Complex samples on the spatial grid, row-major in axis order.
struct SampledField {
    GridSpec grid;
    std::vector<cplx> values;

    SampledField() = default;
    SampledField(const GridSpec& g, std::vector<cplx> v);

    /// Zero field on a grid.
    static SampledField zeros(const GridSpec& g) {
        return SampledField(g, std::vector<cplx>(g.size(), cplx(0.0, 0.0)));
    }

    cplx& at(int i) { return values[static_cast<std::size_t>(i)]; }
    cplx at(int i) const { return values[static_cast<std::size_t>(i)]; }
    // n = 2 accessors, axis 0 major
    cplx& at(int i0, int i1) {
        return values[static_cast<std::size_t>(i0) * grid.points_per_axis + i1];
    }
    cplx at(int i0, int i1) const {
        return values[static_cast<std::size_t>(i0) * grid.points_per_axis + i1];
    }
};

/// DFT coefficients scaled to approximate the continuous transform
/// fhat(xi_k) with the 2*pi-in-exponent convention; wrapped index order.
struct SpectralField {
    GridSpec grid;
    std::vector<cplx> coefficients;

    SpectralField() = default;
    SpectralField(const GridSpec& g, std::vector<cplx> c);

    static SpectralField zeros(const GridSpec& g) {
        return SpectralField(g, std::vector<cplx>(g.size(), cplx(0.0, 0.0)));
    }

    cplx& at(int j) { return coefficients[static_cast<std::size_t>(j)]; }
    cplx at(int j) const { return coefficients[static_cast<std::size_t>(j)]; }
    cplx& at(int j0, int j1) {
        return coefficients[static_cast<std::size_t>(j0) * grid.points_per_axis + j1];
    }
    cplx at(int j0, int j1) const {
        return coefficients[static_cast<std::size_t>(j0) * grid.points_per_axis + j1];
    }
};

/// Vector of strictly positive reals standing in for the exponents
/// (alpha, beta, lambda) of the per-axis operators.
struct MultiIndex {
    std::vector<double> components;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<double> c);
    MultiIndex(std::initializer_list<double> c) : MultiIndex(std::vector<double>(c)) {}

    /// Same value on every axis.
    static MultiIndex uniform(int n, double v) {
        return MultiIndex(std::vector<double>(static_cast<std::size_t>(n), v));
    }

    int dimension() const { return static_cast<int>(components.size()); }
    double operator[](int i) const { return components[static_cast<std::size_t>(i)]; }

    /// Componentwise shift (beta = alpha + 1/2 and friends).
    MultiIndex shifted(double d) const {
        MultiIndex r = *this;
        for (double& c : r.components) c += d;
        return r;
    }

    void require_in(double lo, double hi, const char* what) const;
};

void require_finite(std::span<const cplx> v, const char* what);

} // namespace msqf

#endif
