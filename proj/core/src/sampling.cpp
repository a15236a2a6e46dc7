#include "fermidec/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "fermidec/dephasing.hpp"
#include "fermidec/measures.hpp"
#include "fermidec/parallel.hpp"

namespace fermidec {

AngMomState random_real_state(SplitMix64& rng, bool enforce_order) {
    double g[6];
    rng.normal_pair(g[0], g[1]);
    rng.normal_pair(g[2], g[3]);
    rng.normal_pair(g[4], g[5]);
    Vector6 a;
    for (int i = 0; i < 6; ++i) a(i) = std::abs(g[i]);
    if (enforce_order && a(2).real() < a(5).real()) std::swap(a(2), a(5));
    return make_state(a);
}

XYZ xyz_map(const AngMomState& state) {
    const Vector6& a = state.alpha;
    XYZ m;
    m.x = a(1).real() * a(3).real();
    m.y = a(0).real() * a(4).real();
    m.z = std::abs(a(2).real() * a(2).real() - a(5).real() * a(5).real());
    return m;
}

double asymptotic_concurrence_xyz(double x, double y, double z) {
    return std::max(0.0, z - 2.0 * (x + y));
}

std::vector<PersistenceRecord> run_atlas(const SamplerConfig& config) {
    // Fixed chunking keeps the stream assignment, and therefore the output,
    // independent of how many workers happen to run.
    constexpr std::uint64_t kChunk = 1024;
    std::vector<PersistenceRecord> records(config.n_samples);
    const std::uint64_t chunks = (config.n_samples + kChunk - 1) / kChunk;

    parallel_for(chunks, [&](std::uint64_t c) {
        SplitMix64 rng = rng_stream(config.seed, c);
        const std::uint64_t lo = c * kChunk;
        const std::uint64_t hi = std::min(lo + kChunk, config.n_samples);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const AngMomState state = random_real_state(rng, config.enforce_order);
            const XYZ m = xyz_map(state);
            PersistenceRecord rec;
            rec.x = m.x;
            rec.y = m.y;
            rec.z = m.z;
            rec.cf0 = concurrence_pure(state);
            rec.cf_inf = asymptotic_concurrence_xyz(m.x, m.y, m.z);
            if (rec.cf0 > 1e-12) rec.p_ratio = rec.cf_inf / rec.cf0;
            records[i] = rec;
        }
    });

    return records;
}

}  // namespace fermidec
