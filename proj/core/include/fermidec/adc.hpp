#pragma once

// Generalized amplitude damping: each excited multiplet level cascades one step
// down (|2,m> -> |2,m-1>) with probability p, while |2,-2> and |0,0> are fixed
// points. Two Kraus operators implement the map exactly.

#include "fermidec/states.hpp"

namespace fermidec {

struct ADCParams {
    double gamma_rate = 1.0;  // decay rate in p(t) = 1 - exp(-gamma_rate * t)
};

struct KrausPair {
    Matrix6d k0;  // diag(sqrt(1-p) x4, 1, 1)
    Matrix6d k1;  // sqrt(p) on the first subdiagonal of the multiplet block
};

KrausPair kraus_pair(double p);  // throws BadProbability unless p in [0, 1]

double p_of_t(double t, const ADCParams& params);

DensityMatrix6 adc_evolve_pure(const AngMomState& state, double p);
DensityMatrix6 adc_evolve(const DensityMatrix6& rho, double p);

// Damping endpoint p = 1, built directly; equals adc_evolve_pure(state, 1).
DensityMatrix6 adc_asymptotic(const AngMomState& state);

}  // namespace fermidec
