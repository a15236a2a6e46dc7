#include "fermidec/dephasing.hpp"

#include <cmath>
#include <stdexcept>

#include "fermidec/measures.hpp"
#include "fermidec/quadrature.hpp"

namespace fermidec {

namespace {

// exp(-x) underflows to exactly 0.0 beyond this, and every decaying matrix
// element carries at least one full power of Gamma in its exponent.
constexpr double kGammaSaturated = 746.0;

void check_params(const BathParams& p) {
    if (!(p.j0 > 0.0) || !(p.omega_c > 0.0)) {
        throw std::invalid_argument("bath parameters require j0 > 0 and omega_c > 0");
    }
    if (p.beta && !(*p.beta > 0.0)) {
        throw std::invalid_argument("bath temperature requires beta > 0");
    }
}

void check_time(double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
}

// Overall prefactor of the decoherence integral. The strict variant keeps the
// literal 4*j0 spectral normalization instead of the reduced form.
double gamma_scale(const BathParams& p) {
    return p.strict_spectral_density ? 8.0 * p.j0 : 0.5 * p.j0;
}

double phase_scale(const BathParams& p) {
    return p.strict_spectral_density ? 4.0 * p.j0 : 1.0;
}

}  // namespace

BathParams BathParams::thermal(double j0, double beta, double omega_c) {
    BathParams p;
    p.j0 = j0;
    p.omega_c = omega_c;
    p.beta = beta;
    check_params(p);
    return p;
}

BathParams BathParams::zero_temperature(double j0, double omega_c) {
    BathParams p;
    p.j0 = j0;
    p.omega_c = omega_c;
    p.beta.reset();
    check_params(p);
    return p;
}

double gamma_of_t(double t, const BathParams& params) {
    check_params(params);
    check_time(t);
    const double tau = params.omega_c * t;
    if (tau == 0.0) return 0.0;

    // Integrand in x = omega/omega_c; the x -> 0 limit is finite.
    const bool zero_t = params.zero_temp();
    const double beta = zero_t ? 0.0 : *params.beta;
    auto integrand = [tau, zero_t, beta](double x) {
        if (x < 1e-12) return zero_t ? 0.0 : tau * tau / (2.0 * beta);
        const double s = std::sin(0.5 * x * tau);
        double v = std::exp(-x) * s * s / x;
        if (!zero_t) v /= std::tanh(0.5 * beta * x);
        return v;
    };

    const double cut = 50.0 + 10.0 * std::max(1.0, tau);
    return gamma_scale(params) * integrate(integrand, 0.0, cut, params.quad_rel_tol).value;
}

double delta_of_t(double t, const BathParams& params) {
    check_params(params);
    check_time(t);
    return phase_scale(params) * std::atan(params.omega_c * t);
}

double theta_of_t(double t, const BathParams& params) {
    check_params(params);
    check_time(t);
    return phase_scale(params) * params.omega_c * t;
}

double gamma_lower_bound(double t, const BathParams& params) {
    check_params(params);
    check_time(t);
    const double tau = params.omega_c * t;
    double bound = 0.25 * std::log1p(tau * tau);  // coth >= 1
    if (!params.zero_temp()) {
        // coth(y) >= 1/y turns the integral into a closed form
        const double thermal =
            (2.0 / *params.beta) * (0.5 * tau * std::atan(tau) - 0.25 * std::log1p(tau * tau));
        bound = std::max(bound, thermal);
    }
    return gamma_scale(params) * bound;
}

BathFunctions bath_functions(double t, const BathParams& params) {
    BathFunctions bf;
    bf.gamma = gamma_of_t(t, params);
    bf.delta = delta_of_t(t, params);
    bf.theta = theta_of_t(t, params);
    bf.r = bf.delta - bf.theta;
    return bf;
}

Complex dephasing_factor(int m, int n, const BathFunctions& bf) {
    if (m < 1 || m > 6 || n < 1 || n > 6) {
        throw std::out_of_range("level indices must lie in 1..6");
    }
    const double lm = kLSpectrum[static_cast<std::size_t>(m - 1)];
    const double ln = kLSpectrum[static_cast<std::size_t>(n - 1)];
    const double diff = lm - ln;
    const double decay = std::exp(-diff * diff * bf.gamma);
    const double phase = (lm * lm - ln * ln) * bf.r;
    return decay * Complex(std::cos(phase), -std::sin(phase));
}

Complex dephasing_factor(int m, int n, double t, const BathParams& params) {
    return dephasing_factor(m, n, bath_functions(t, params));
}

DensityMatrix6 evolve(const DensityMatrix6& rho0, const BathFunctions& bf) {
    DensityMatrix6 out = change_basis(rho0, BasisTag::AngMom);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            out.rho(i, j) *= dephasing_factor(i + 1, j + 1, bf);
    return out;
}

DensityMatrix6 evolve(const DensityMatrix6& rho0, double t, const BathParams& params) {
    // Once exp(-Gamma) provably underflows, the factor matrix is exactly the
    // asymptotic mask and the quadrature (which would need to resolve ~tau
    // oscillations) is pointless.
    if (gamma_lower_bound(t, params) >= kGammaSaturated) return asymptotic_state(rho0);
    return evolve(rho0, bath_functions(t, params));
}

DensityMatrix6 asymptotic_state(const DensityMatrix6& rho0) {
    const DensityMatrix6 in = change_basis(rho0, BasisTag::AngMom);
    Matrix6 m = Matrix6::Zero();
    m.diagonal() = in.rho.diagonal();
    m(2, 5) = in.rho(2, 5);
    m(5, 2) = in.rho(5, 2);
    return DensityMatrix6{m, BasisTag::AngMom};
}

double asymptotic_coherence(const AngMomState& state) {
    const Complex a3 = state.alpha(2);
    const Complex a6 = state.alpha(5);
    return std::abs(
        Complex(std::norm(a3) - std::norm(a6), 2.0 * std::imag(a3 * std::conj(a6))));
}

double asymptotic_concurrence(const AngMomState& state) {
    const double y = std::abs(state.alpha(0) * state.alpha(4));
    const double x = std::abs(state.alpha(1) * state.alpha(3));
    return std::max(0.0, asymptotic_coherence(state) - 2.0 * (x + y));
}

double persistence(const AngMomState& state) {
    const double cf0 = concurrence_pure(state);
    if (cf0 <= 1e-12) {
        throw ZeroInitialEntanglement("persistence undefined for a separable initial state");
    }
    return asymptotic_concurrence(state) / cf0;
}

}  // namespace fermidec
