#pragma once

#include <optional>
#include <vector>

#include "fermidec/adc.hpp"
#include "fermidec/dephasing.hpp"

namespace fermidec {

struct TimeGrid {
    double t_min = 0.0;
    double t_max = 30.0;
    int points = 300;
    enum class Spacing { Linear, Log } spacing = Spacing::Linear;

    std::vector<double> times() const;  // log spacing requires t_min > 0
};

struct SeriesRow {
    double t = 0.0;
    std::optional<double> p;  // damping probability, set for the ADC channel only
    double cf = 0.0;
    double coherence = 0.0;
    double entropy = 0.0;
    double purity = 0.0;
};

// One bath-function evaluation per grid point, shared by all 36 matrix
// elements; points are computed in parallel (FERMIDEC_THREADS workers).
std::vector<SeriesRow> dephasing_series(const DensityMatrix6& rho0, const TimeGrid& grid,
                                        const BathParams& params);

std::vector<SeriesRow> adc_series(const AngMomState& state, const TimeGrid& grid,
                                  const ADCParams& params);

}  // namespace fermidec
