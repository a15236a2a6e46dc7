#pragma once

// Collective dephasing of the pair by an ohmic boson bath with exponential
// cutoff. Populations are untouched; each coherence rho_mn picks up
//
//   f_mn(t) = exp(-(L_m - L_n)^2 Gamma(t)) * exp(-i (L_m^2 - L_n^2) r(t))
//
// with L = (2, 1, 0, -1, -2, 0), Gamma the decoherence integral and
// r = Delta - Theta the phase drift. Times are measured in units of 1/omega_c.

#include <array>
#include <optional>

#include "fermidec/states.hpp"

namespace fermidec {

struct BathParams {
    double j0 = 8.0;                   // dimensionless coupling strength
    double omega_c = 1.0;              // cutoff frequency
    std::optional<double> beta = 1.0;  // inverse temperature in units of 1/omega_c; nullopt = T = 0
    double quad_rel_tol = 1e-10;
    bool strict_spectral_density = false;  // apply the literal 4*j0 spectral prefactor throughout

    static BathParams thermal(double j0, double beta, double omega_c = 1.0);
    static BathParams zero_temperature(double j0, double omega_c = 1.0);
    bool zero_temp() const { return !beta.has_value(); }
};

inline constexpr std::array<double, 6> kLSpectrum = {2.0, 1.0, 0.0, -1.0, -2.0, 0.0};

struct BathFunctions {
    double gamma = 0.0;  // decoherence exponent, nondecreasing in t
    double delta = 0.0;
    double theta = 0.0;
    double r = 0.0;      // delta - theta
};

// Adaptive quadrature of the decoherence integral over x = omega/omega_c.
// The x -> 0 limit of the integrand is finite (t^2 omega_c^2 / (2 beta) at
// finite temperature, zero at T = 0). Throws QuadratureFailure when the
// requested tolerance cannot be met within the panel budget.
double gamma_of_t(double t, const BathParams& params);

double delta_of_t(double t, const BathParams& params);  // arctan(omega_c t), closed form
double theta_of_t(double t, const BathParams& params);  // omega_c t, exact

// Rigorous closed-form lower bound on Gamma(t), from coth(y) >= max(1, 1/y).
// Used to recognize the regime where every decaying factor underflows to zero.
double gamma_lower_bound(double t, const BathParams& params);

BathFunctions bath_functions(double t, const BathParams& params);

// f_mn above; m and n are 1-based level indices.
Complex dephasing_factor(int m, int n, const BathFunctions& bf);
Complex dephasing_factor(int m, int n, double t, const BathParams& params);

// Elementwise application of f_mn in the angular momentum basis. Input in any
// basis; the result is returned in the angular momentum basis. The overload
// taking t short-circuits to asymptotic_state() once gamma_lower_bound()
// certifies that exp(-Gamma) underflows, so arbitrarily late times are exact
// instead of a quadrature failure.
DensityMatrix6 evolve(const DensityMatrix6& rho0, const BathFunctions& bf);
DensityMatrix6 evolve(const DensityMatrix6& rho0, double t, const BathParams& params);

// t -> infinity limit: populations plus the (3,6) coherence, everything else zero.
DensityMatrix6 asymptotic_state(const DensityMatrix6& rho0);

// Surviving Slater coherence | |alpha3|^2 - |alpha6|^2 + 2i Im(alpha3 conj(alpha6)) |
// of the asymptote of the pure state rho0 = |state><state|.
double asymptotic_coherence(const AngMomState& state);

// max{0, K_inf - 2(|alpha1 alpha5| + |alpha2 alpha4|)}.
double asymptotic_concurrence(const AngMomState& state);

// asymptotic_concurrence / concurrence_pure, in [0, 1]. Throws
// ZeroInitialEntanglement when the initial concurrence is below 1e-12.
double persistence(const AngMomState& state);

}  // namespace fermidec
