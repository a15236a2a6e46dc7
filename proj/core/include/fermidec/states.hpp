#pragma once

// Two indistinguishable spin-3/2 fermions on d = 4 single-particle levels. The
// antisymmetric sector is six dimensional and carries two natural expansions:
//
//   angular momentum basis  {|2,2>, |2,1>, |2,0>, |2,-1>, |2,-2>, |0,0>}
//   ordered Slater basis    (s12, s13, s14, s24, s34, s23)
//
// Amplitudes are stored 0-based in those orders. The two expansions differ only
// in the {|2,0>, |0,0>} <-> {s14, s23} block, mixed by 1/sqrt(2). A third,
// phase-adjusted basis replaces |0,0> by i|0,0> so that the spin-flip matrix
// used by the concurrence becomes real; density matrices carry a tag naming
// which of the three conventions their entries are written in.

#include <span>
#include <string_view>

#include "fermidec/errors.hpp"
#include "fermidec/types.hpp"

namespace fermidec {

enum class BasisTag { AngMom, Slater, BTilde };

// Pure state over the angular momentum basis; unit norm by construction.
struct AngMomState {
    Vector6 alpha;
};

// The same state expanded over ordered Slater determinants.
struct SlaterState {
    Vector6 s;
};

// Normalizes the input. Throws BadLength unless exactly 6 amplitudes are given
// and ZeroNorm when the squared norm falls below 1e-12.
AngMomState make_state(std::span<const Complex> amplitudes);
AngMomState make_state(const Vector6& amplitudes);

// Change of basis between the two expansions: real, symmetric, orthogonal and
// therefore its own inverse.
const Matrix6d& slater_transform();

SlaterState to_slater(const AngMomState& state);
AngMomState from_slater(const SlaterState& state);  // renormalizes, may throw ZeroNorm

struct DensityMatrix6 {
    Matrix6 rho = Matrix6::Zero();
    BasisTag basis = BasisTag::AngMom;
};

DensityMatrix6 density_from_pure(const AngMomState& state);
DensityMatrix6 change_basis(const DensityMatrix6& in, BasisTag target);

// Guards the type invariants: Hermitian within 1e-12 elementwise, unit trace
// within 1e-12, smallest eigenvalue >= -1e-10. Throws NonPhysical.
void validate_density(const DensityMatrix6& rho);

// DFS: support inside {alpha3, alpha6}, where dephasing never acts.
// ED24 / ED15: support inside one exchange-degenerate pair.
// FamilyI: alpha1*alpha5 and alpha2*alpha4 both vanish while the decoherence
// free coherence survives, with support beyond the DFS pattern.
enum class SubspaceLabel { DFS, ED24, ED15, FamilyI, Generic };

std::string_view to_string(SubspaceLabel label);

SubspaceLabel classify_subspace(const AngMomState& state, double tol = 1e-12);

}  // namespace fermidec
