#include "msqf/quadrature.hpp"

namespace msqf {

DyadicTGrid::DyadicTGrid(double tmin, double tmax, int m)
    : t_min(tmin), t_max(tmax), steps_per_octave(m) {
    if (!(tmin > 0.0) || !(tmax > tmin))
        throw std::invalid_argument("DyadicTGrid: need 0 < t_min < t_max");
    if (m < 4)
        throw std::invalid_argument("DyadicTGrid: steps_per_octave must be >= 4");
    const double octaves = std::log2(tmax / tmin);
    const long long count = std::llround(octaves * m);
    if (count < 1)
        throw std::invalid_argument("DyadicTGrid: empty range");
    nodes.resize(static_cast<std::size_t>(count));
    for (long long j = 0; j < count; ++j)
        nodes[static_cast<std::size_t>(j)] = tmin * std::exp2((j + 0.5) / m);
}

double log_quadrature(std::span<const double> samples, const DyadicTGrid& grid) {
    if (samples.size() != grid.nodes.size())
        throw std::invalid_argument("log_quadrature: sample count != node count");
    if (samples.empty()) return 0.0;
    const double w = grid.weight();
    double acc = 0.0;
    for (double s : samples) acc += s;
    return acc * w;
}

} // namespace msqf
