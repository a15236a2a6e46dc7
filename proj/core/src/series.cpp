#include "fermidec/series.hpp"

#include <cmath>
#include <stdexcept>

#include "fermidec/measures.hpp"
#include "fermidec/parallel.hpp"

namespace fermidec {

std::vector<double> TimeGrid::times() const {
    if (points < 1) throw std::invalid_argument("time grid needs at least one point");
    if (!(t_min >= 0.0) || !(t_max >= t_min)) {
        throw std::invalid_argument("time grid requires 0 <= t_min <= t_max");
    }
    if (points == 1) return {t_min};

    std::vector<double> ts(static_cast<std::size_t>(points));
    if (spacing == Spacing::Log) {
        if (!(t_min > 0.0)) throw std::invalid_argument("log spacing requires t_min > 0");
        const double step = (std::log(t_max) - std::log(t_min)) / (points - 1);
        for (int k = 0; k < points; ++k)
            ts[static_cast<std::size_t>(k)] = std::exp(std::log(t_min) + step * k);
    } else {
        const double step = (t_max - t_min) / (points - 1);
        for (int k = 0; k < points; ++k) ts[static_cast<std::size_t>(k)] = t_min + step * k;
    }
    ts.back() = t_max;  // pin the endpoint against rounding
    return ts;
}

namespace {

SeriesRow measure_row(double t, std::optional<double> p, const DensityMatrix6& rho) {
    SeriesRow row;
    row.t = t;
    row.p = p;
    row.cf = concurrence(rho).value;
    row.coherence = fermidec::coherence(rho);
    row.entropy = von_neumann_entropy(rho);
    row.purity = fermidec::purity(rho);
    return row;
}

}  // namespace

std::vector<SeriesRow> dephasing_series(const DensityMatrix6& rho0, const TimeGrid& grid,
                                        const BathParams& params) {
    const std::vector<double> ts = grid.times();
    const DensityMatrix6 in = change_basis(rho0, BasisTag::AngMom);
    std::vector<SeriesRow> rows(ts.size());
    parallel_for(ts.size(), [&](std::uint64_t k) {
        rows[k] = measure_row(ts[k], std::nullopt, evolve(in, ts[k], params));
    });
    return rows;
}

std::vector<SeriesRow> adc_series(const AngMomState& state, const TimeGrid& grid,
                                  const ADCParams& params) {
    const std::vector<double> ts = grid.times();
    std::vector<SeriesRow> rows(ts.size());
    parallel_for(ts.size(), [&](std::uint64_t k) {
        const double p = p_of_t(ts[k], params);
        rows[k] = measure_row(ts[k], p, adc_evolve_pure(state, p));
    });
    return rows;
}

}  // namespace fermidec
