#include "fermidec/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fermidec {

namespace {

// Angular momentum coordinates -> phase-adjusted coordinates: the sixth
// amplitude picks up a factor -i (the basis vector itself gains the i).
const Matrix6& btilde_phase() {
    static const Matrix6 v = [] {
        Matrix6 m = Matrix6::Identity();
        m(5, 5) = Complex(0.0, -1.0);
        return m;
    }();
    return v;
}

Matrix6 to_angmom_matrix(const DensityMatrix6& in) {
    switch (in.basis) {
        case BasisTag::AngMom:
            return in.rho;
        case BasisTag::Slater: {
            const Matrix6 u = slater_transform().cast<Complex>();
            return u * in.rho * u;  // u is its own inverse and Hermitian
        }
        case BasisTag::BTilde: {
            const Matrix6& v = btilde_phase();
            return v.adjoint() * in.rho * v;
        }
    }
    throw std::logic_error("unreachable basis tag");
}

Matrix6 from_angmom_matrix(const Matrix6& rho, BasisTag target) {
    switch (target) {
        case BasisTag::AngMom:
            return rho;
        case BasisTag::Slater: {
            const Matrix6 u = slater_transform().cast<Complex>();
            return u * rho * u;
        }
        case BasisTag::BTilde: {
            const Matrix6& v = btilde_phase();
            return v * rho * v.adjoint();
        }
    }
    throw std::logic_error("unreachable basis tag");
}

}  // namespace

AngMomState make_state(std::span<const Complex> amplitudes) {
    if (amplitudes.size() != 6) {
        throw BadLength("state needs exactly 6 amplitudes, got " +
                        std::to_string(amplitudes.size()));
    }
    Vector6 a;
    for (int i = 0; i < 6; ++i) a(i) = amplitudes[static_cast<std::size_t>(i)];
    return make_state(a);
}

AngMomState make_state(const Vector6& amplitudes) {
    const double n2 = amplitudes.squaredNorm();
    if (n2 < 1e-12) throw ZeroNorm("state amplitudes have (near) zero norm");
    return AngMomState{amplitudes / std::sqrt(n2)};
}

const Matrix6d& slater_transform() {
    static const Matrix6d u = [] {
        Matrix6d m = Matrix6d::Identity();
        const double r = 0.5 * std::numbers::sqrt2;  // correctly rounded 1/sqrt(2)
        m(2, 2) = r;
        m(2, 5) = r;
        m(5, 2) = r;
        m(5, 5) = -r;
        return m;
    }();
    return u;
}

SlaterState to_slater(const AngMomState& state) {
    return SlaterState{slater_transform().cast<Complex>() * state.alpha};
}

AngMomState from_slater(const SlaterState& state) {
    return make_state(slater_transform().cast<Complex>() * state.s);
}

DensityMatrix6 density_from_pure(const AngMomState& state) {
    return DensityMatrix6{state.alpha * state.alpha.adjoint(), BasisTag::AngMom};
}

DensityMatrix6 change_basis(const DensityMatrix6& in, BasisTag target) {
    if (in.basis == target) return in;
    return DensityMatrix6{from_angmom_matrix(to_angmom_matrix(in), target), target};
}

void validate_density(const DensityMatrix6& rho) {
    const double herm = (rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) {
        throw NonPhysical("density matrix is not Hermitian (deviation " + std::to_string(herm) +
                          ")");
    }
    const double trace_dev = std::abs(rho.rho.trace() - Complex(1.0, 0.0));
    if (trace_dev > 1e-12) {
        throw NonPhysical("density matrix trace deviates from 1 by " +
                          std::to_string(trace_dev));
    }
    const Eigen::SelfAdjointEigenSolver<Matrix6> es(rho.rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -1e-10) {
        throw NonPhysical("density matrix has eigenvalue " +
                          std::to_string(es.eigenvalues()(0)));
    }
}

std::string_view to_string(SubspaceLabel label) {
    switch (label) {
        case SubspaceLabel::DFS: return "DFS";
        case SubspaceLabel::ED24: return "ED24";
        case SubspaceLabel::ED15: return "ED15";
        case SubspaceLabel::FamilyI: return "FamilyI";
        case SubspaceLabel::Generic: return "Generic";
    }
    return "Generic";
}

SubspaceLabel classify_subspace(const AngMomState& state, double tol) {
    const Vector6& a = state.alpha;
    bool on[6];
    for (int i = 0; i < 6; ++i) on[i] = std::abs(a(i)) > tol;

    if (!on[0] && !on[1] && !on[3] && !on[4]) return SubspaceLabel::DFS;
    if (!on[0] && !on[2] && !on[4] && !on[5]) return SubspaceLabel::ED24;
    if (!on[1] && !on[2] && !on[3] && !on[5]) return SubspaceLabel::ED15;

    const double k_inf = std::abs(Complex(std::norm(a(2)) - std::norm(a(5)),
                                          2.0 * std::imag(a(2) * std::conj(a(5)))));
    const bool products_vanish =
        std::abs(a(0) * a(4)) <= tol && std::abs(a(1) * a(3)) <= tol;
    if (products_vanish && k_inf > tol) return SubspaceLabel::FamilyI;

    return SubspaceLabel::Generic;
}

}  // namespace fermidec
