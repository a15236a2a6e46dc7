#pragma once

// Monte Carlo atlas over states with real nonnegative amplitudes. Each draw is
// reduced to the coordinates x = alpha2 alpha4, y = alpha1 alpha5,
// z = |alpha3^2 - alpha6^2|, which live inside the tetrahedron 2(x + y) + z <= 1
// and determine how much entanglement survives dephasing.

#include <cstdint>
#include <optional>
#include <vector>

#include "fermidec/rng.hpp"
#include "fermidec/states.hpp"

namespace fermidec {

struct XYZ {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct PersistenceRecord {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double cf0 = 0.0;                // initial concurrence
    double cf_inf = 0.0;             // surviving concurrence
    std::optional<double> p_ratio;   // cf_inf / cf0, absent when cf0 vanishes
};

struct SamplerConfig {
    std::uint64_t n_samples = 100000;
    std::uint64_t seed = 1;
    bool enforce_order = true;  // swap alpha3/alpha6 so that alpha3 >= alpha6
};

// |g|/||g|| over six standard normals; uniform on the positive orthant of S^5.
AngMomState random_real_state(SplitMix64& rng, bool enforce_order = true);

XYZ xyz_map(const AngMomState& state);  // expects real nonnegative amplitudes

double asymptotic_concurrence_xyz(double x, double y, double z);

// Deterministic for a given config: sampling is chunked into fixed-size streams
// keyed by (seed, chunk index), so serial and parallel runs agree exactly.
std::vector<PersistenceRecord> run_atlas(const SamplerConfig& config);

}  // namespace fermidec
