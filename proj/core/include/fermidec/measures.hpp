#pragma once

#include <array>

#include "fermidec/states.hpp"

namespace fermidec {

// Spin-flip conjugation in the phase-adjusted basis: swaps the (1,5) index pair,
// swaps (2,4) with a sign, fixes 3 and 6. Real, symmetric, its own inverse.
const Matrix6d& flip_matrix();

struct ConcurrenceBreakdown {
    std::array<double, 6> lambdas{};  // descending square roots of the rho*rhotilde spectrum
    double value = 0.0;               // max{0, lambdas[0] - (lambdas[1] + ... + lambdas[5])}
};

// Closed form for pure states: |alpha3^2 - alpha6^2 + 2(alpha1 alpha5 - alpha2 alpha4)|.
double concurrence_pure(const AngMomState& state);

// Mixed-state fermionic concurrence. The lambdas are obtained as singular values
// of sqrt(rho) * flip * conj(sqrt(rho)) in the phase-adjusted basis, which shares
// its spectrum with rho*rhotilde but avoids the square-root blowup a general
// eigensolver suffers on the (theoretically zero) tail of the spectrum.
// Throws NonPhysical when the input is not Hermitian within 1e-12 or has an
// eigenvalue below -1e-10; eigenvalues in [-1e-10, 0) are clamped to zero.
ConcurrenceBreakdown concurrence(const DensityMatrix6& rho);

// l1 coherence: sum of |rho_mn|, m != n, taken in the Slater basis.
double coherence(const DensityMatrix6& rho);

// -Tr(rho ln rho) in nats. Throws NonPhysical on eigenvalues below -1e-10;
// populations up to 1e-15 are treated as exact zeros.
double von_neumann_entropy(const DensityMatrix6& rho);

double purity(const DensityMatrix6& rho);  // Tr(rho^2)

}  // namespace fermidec
