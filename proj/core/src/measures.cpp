#include "fermidec/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fermidec {

namespace {

// Shared guard for the eigenvalue-based measures; returns the spectral
// decomposition so callers pay for one solve only.
Eigen::SelfAdjointEigenSolver<Matrix6> checked_eigensolve(const Matrix6& rho) {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) {
        throw NonPhysical("matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Matrix6> es(rho);
    if (es.eigenvalues()(0) < -1e-10) {
        throw NonPhysical("matrix has eigenvalue " + std::to_string(es.eigenvalues()(0)));
    }
    return es;
}

}  // namespace

const Matrix6d& flip_matrix() {
    static const Matrix6d m = [] {
        Matrix6d f = Matrix6d::Zero();
        f(0, 4) = 1.0;
        f(4, 0) = 1.0;
        f(1, 3) = -1.0;
        f(3, 1) = -1.0;
        f(2, 2) = 1.0;
        f(5, 5) = 1.0;
        return f;
    }();
    return m;
}

double concurrence_pure(const AngMomState& state) {
    const Vector6& a = state.alpha;
    return std::abs(a(2) * a(2) - a(5) * a(5) + 2.0 * (a(0) * a(4) - a(1) * a(3)));
}

ConcurrenceBreakdown concurrence(const DensityMatrix6& rho) {
    const DensityMatrix6 rb = change_basis(rho, BasisTag::BTilde);
    const auto es = checked_eigensolve(rb.rho);

    const Eigen::Matrix<double, 6, 1> w = es.eigenvalues().cwiseMax(0.0);
    const Matrix6 root =
        es.eigenvectors() * w.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    const Matrix6 b = root * flip_matrix().cast<Complex>() * root.conjugate();

    const Eigen::JacobiSVD<Matrix6> svd(b);
    ConcurrenceBreakdown out;
    double total = 0.0;
    for (int i = 0; i < 6; ++i) {
        out.lambdas[static_cast<std::size_t>(i)] = svd.singularValues()(i);
        total += svd.singularValues()(i);
    }
    out.value = std::max(0.0, 2.0 * svd.singularValues()(0) - total);
    return out;
}

double coherence(const DensityMatrix6& rho) {
    const DensityMatrix6 rs = change_basis(rho, BasisTag::Slater);
    double sum = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) sum += std::abs(rs.rho(i, j));
    return sum;
}

double von_neumann_entropy(const DensityMatrix6& rho) {
    const auto es = checked_eigensolve(rho.rho);
    double s = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-15) s -= p * std::log(p);
    }
    return std::max(0.0, s);
}

double purity(const DensityMatrix6& rho) {
    return (rho.rho * rho.rho).trace().real();
}

}  // namespace fermidec
