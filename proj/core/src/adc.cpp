#include "fermidec/adc.hpp"

#include <cmath>
#include <stdexcept>

namespace fermidec {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw BadProbability("damping probability must lie in [0, 1]");
    }
}

}  // namespace

KrausPair kraus_pair(double p) {
    check_probability(p);
    KrausPair k;
    k.k0 = Matrix6d::Identity();
    const double stay = std::sqrt(1.0 - p);
    for (int n = 0; n < 4; ++n) k.k0(n, n) = stay;
    k.k1 = Matrix6d::Zero();
    const double drop = std::sqrt(p);
    for (int n = 0; n < 4; ++n) k.k1(n + 1, n) = drop;
    return k;
}

double p_of_t(double t, const ADCParams& params) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
    if (!(params.gamma_rate >= 0.0)) {
        throw std::invalid_argument("decay rate must be nonnegative");
    }
    return 1.0 - std::exp(-params.gamma_rate * t);
}

DensityMatrix6 adc_evolve_pure(const AngMomState& state, double p) {
    const KrausPair k = kraus_pair(p);
    const Vector6 surviving = k.k0.cast<Complex>() * state.alpha;
    const Vector6 dropped = k.k1.cast<Complex>() * state.alpha;
    return DensityMatrix6{surviving * surviving.adjoint() + dropped * dropped.adjoint(),
                          BasisTag::AngMom};
}

DensityMatrix6 adc_evolve(const DensityMatrix6& rho, double p) {
    const KrausPair k = kraus_pair(p);
    const DensityMatrix6 in = change_basis(rho, BasisTag::AngMom);
    const Matrix6 k0 = k.k0.cast<Complex>();
    const Matrix6 k1 = k.k1.cast<Complex>();
    return DensityMatrix6{k0 * in.rho * k0.adjoint() + k1 * in.rho * k1.adjoint(),
                          BasisTag::AngMom};
}

DensityMatrix6 adc_asymptotic(const AngMomState& state) {
    const Vector6& a = state.alpha;
    Matrix6 m = Matrix6::Zero();
    // every multiplet level has cascaded one step; |2,-2> and |0,0> kept theirs
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m(i + 1, j + 1) = a(i) * std::conj(a(j));
    m(4, 4) += std::norm(a(4));
    m(4, 5) += a(4) * std::conj(a(5));
    m(5, 4) += a(5) * std::conj(a(4));
    m(5, 5) += std::norm(a(5));
    return DensityMatrix6{m, BasisTag::AngMom};
}

}  // namespace fermidec
