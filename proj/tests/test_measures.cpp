#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fermidec/fermidec.hpp"
#include "helpers.hpp"

using namespace fermidec;
using testutil::state_of;

TEST_CASE("flip matrix structure") {
    const Matrix6d& m = flip_matrix();
    CHECK(((m * m) - Matrix6d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(m(0, 4) == 1.0);
    CHECK(m(1, 3) == -1.0);
    CHECK(m(2, 2) == 1.0);
    CHECK(m(5, 5) == 1.0);
    CHECK(m.cwiseAbs().sum() == 6.0);
}

TEST_CASE("closed form on the constant concurrence pair") {
    const double s1 = std::sqrt(0.1), s8 = std::sqrt(0.8);
    CHECK(std::abs(concurrence_pure(state_of({s1, 0, s8, 0, 0, s1})) - 0.7) < 1e-12);
    CHECK(std::abs(concurrence_pure(state_of({0, 0, std::sqrt(0.9), 0.2, std::sqrt(0.05), 0.1})) -
                   0.89) < 1e-12);
}

TEST_CASE("single determinants are separable, the mid-level pair is maximal") {
    Vector6 s = Vector6::Zero();
    s(0) = 1.0;
    CHECK(concurrence_pure(from_slater(SlaterState{s})) < 1e-15);

    // (s14 - s23)/sqrt(2) is the angular momentum singlet with concurrence 1
    CHECK(std::abs(concurrence_pure(state_of({0, 0, 0, 0, 0, 1})) - 1.0) < 1e-15);
}

TEST_CASE("mixed concurrence collapses to the closed form on projectors") {
    SplitMix64 rng{7};
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const AngMomState psi = testutil::random_complex_state(rng);
        const double mixed = concurrence(density_from_pure(psi)).value;
        worst = std::max(worst, std::abs(mixed - concurrence_pure(psi)));
    }
    CHECK(worst < 1e-12);
}

// Slow but independent reference: the square roots of the rho*rhotilde spectrum
// from a general complex eigensolver, instead of singular values of the
// symmetrized product.
TEST_CASE("lambdas match the direct rho rhotilde spectrum") {
    SplitMix64 rng{8};
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix6 rho = testutil::random_mixed_density(rng, 3 + (k % 4));
        const ConcurrenceBreakdown breakdown = concurrence(rho);

        const DensityMatrix6 rb = change_basis(rho, BasisTag::BTilde);
        const Matrix6 flip = flip_matrix().cast<Complex>();
        const Matrix6 rhotilde = flip * rb.rho.conjugate() * flip;
        const Eigen::ComplexEigenSolver<Matrix6> es(rb.rho * rhotilde);

        std::array<double, 6> direct{};
        for (int i = 0; i < 6; ++i) {
            direct[static_cast<std::size_t>(i)] =
                std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
        }
        std::sort(direct.begin(), direct.end(), std::greater<>());
        for (int i = 0; i < 6; ++i) {
            CHECK(std::abs(direct[static_cast<std::size_t>(i)] -
                           breakdown.lambdas[static_cast<std::size_t>(i)]) < 1e-6);
        }
    }
}

TEST_CASE("lambdas come out sorted and the value matches their gap") {
    SplitMix64 rng{9};
    const ConcurrenceBreakdown b = concurrence(testutil::random_mixed_density(rng, 6));
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) {
        CHECK(b.lambdas[static_cast<std::size_t>(i)] >=
              b.lambdas[static_cast<std::size_t>(i + 1)]);
    }
    for (double l : b.lambdas) sum += l;
    CHECK(b.value == std::max(0.0, 2.0 * b.lambdas[0] - sum));
}

TEST_CASE("maximally mixed state has no entanglement and no coherence") {
    DensityMatrix6 mixed;
    mixed.rho = Matrix6::Identity() / 6.0;
    CHECK(concurrence(mixed).value == 0.0);
    CHECK(coherence(mixed) < 1e-15);
    CHECK(std::abs(von_neumann_entropy(mixed) - std::log(6.0)) < 1e-14);
    CHECK(std::abs(purity(mixed) - 1.0 / 6.0) < 1e-16);
}

TEST_CASE("coherence is measured in the determinant basis") {
    // a single determinant has zero l1 coherence although its angular momentum
    // expansion is spread over two levels
    Vector6 s = Vector6::Zero();
    s(2) = 1.0;
    const AngMomState psi = from_slater(SlaterState{s});
    CHECK(std::abs(psi.alpha(2) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(coherence(density_from_pure(psi)) < 1e-15);

    const double s1 = std::sqrt(0.1), s8 = std::sqrt(0.8);
    const DensityMatrix6 left = density_from_pure(state_of({s1, 0, s8, 0, 0, s1}));
    CHECK(std::abs(coherence(left) - 1.5) < 1e-12);
}

TEST_CASE("projector entropy and purity") {
    SplitMix64 rng{10};
    const DensityMatrix6 rho = density_from_pure(testutil::random_complex_state(rng));
    const double entropy = von_neumann_entropy(rho);
    CHECK(entropy >= 0.0);
    CHECK(entropy < 1e-13);
    CHECK(std::abs(purity(rho) - 1.0) < 1e-13);
}

TEST_CASE("measures refuse nonphysical input") {
    DensityMatrix6 skew;
    skew.rho = Matrix6::Zero();
    skew.rho(0, 0) = 1.0;
    skew.rho(0, 1) = Complex(0.5, 0.0);
    CHECK_THROWS_AS(concurrence(skew), NonPhysical);
    CHECK_THROWS_AS(von_neumann_entropy(skew), NonPhysical);

    DensityMatrix6 negative;
    negative.rho = Matrix6::Zero();
    negative.rho(0, 0) = 1.2;
    negative.rho(1, 1) = -0.2;
    CHECK_THROWS_AS(concurrence(negative), NonPhysical);
}

TEST_CASE("mixing with noise never raises concurrence above the pure value") {
    const AngMomState psi = state_of({0, 0, 0, 0, 0, 1});
    const DensityMatrix6 pure = density_from_pure(psi);
    double previous = concurrence(pure).value;
    for (double lam : {0.1, 0.3, 0.5, 0.8, 1.0}) {
        DensityMatrix6 noisy;
        noisy.rho = (1.0 - lam) * pure.rho + lam * Matrix6::Identity() / 6.0;
        const double c = concurrence(noisy).value;
        CHECK(c <= previous + 1e-12);
        previous = c;
    }
}
