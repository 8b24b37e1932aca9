#ifndef MSQF_FAMILIES_HPP
#define MSQF_FAMILIES_HPP

#include "msqf/grid.hpp"

#include <cstdint>
#include <string>

namespace msqf {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform, used for all seeded test-family construction.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// uniform in [-1, 1)
    double centered() { return 2.0 * uniform() - 1.0; }
};

struct FamilyMember {
    SampledField field;
    std::string label;
};

/// A named list of test fields sharing one grid, with the construction
/// guarantees the verification checks rely on.
struct TestFamily {
    std::string name;
    GridSpec grid;
    bool riesz_safe = false;    // per-axis mean projected to zero exactly
    bool half_line = false;     // spectrum supported on xi_j >= 0 exactly
    std::vector<FamilyMember> members;
};

/// Family names: gauss-deriv | gauss-mod | half-line | random-band.
/// Throws std::invalid_argument for unknown names. `count` > default adds
/// seeded parameter variations (family enlargement).
TestFamily make_family(const std::string& name, const GridSpec& grid,
                       std::uint64_t seed, int count = 3);

/// Spatial mass outside [-L/2, L/2)^n relative to the peak |f|.
double relative_outside_mass(const SampledField& f);

} // namespace msqf

#endif
