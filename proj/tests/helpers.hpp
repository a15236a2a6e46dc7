#pragma once

#include <initializer_list>

#include "fermidec/rng.hpp"
#include "fermidec/states.hpp"

namespace testutil {

inline fermidec::AngMomState state_of(std::initializer_list<double> reals) {
    fermidec::Vector6 v;
    int i = 0;
    for (double x : reals) v(i++) = x;
    return fermidec::make_state(v);
}

inline fermidec::AngMomState random_complex_state(fermidec::SplitMix64& rng) {
    fermidec::Vector6 v;
    for (int i = 0; i < 6; ++i) {
        double re = 0.0, im = 0.0;
        rng.normal_pair(re, im);
        v(i) = fermidec::Complex(re, im);
    }
    return fermidec::make_state(v);
}

// Convex mixture of random projectors, full support for rank >= 6.
inline fermidec::DensityMatrix6 random_mixed_density(fermidec::SplitMix64& rng, int rank = 3) {
    fermidec::Matrix6 rho = fermidec::Matrix6::Zero();
    double total = 0.0;
    for (int k = 0; k < rank; ++k) {
        const fermidec::AngMomState psi = random_complex_state(rng);
        const double w = rng.uniform();
        rho += w * (psi.alpha * psi.alpha.adjoint());
        total += w;
    }
    rho /= total;
    return fermidec::DensityMatrix6{rho, fermidec::BasisTag::AngMom};
}

}  // namespace testutil
