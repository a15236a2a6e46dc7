#include <cmath>

#include "doctest.h"
#include "fermidec/fermidec.hpp"
#include "helpers.hpp"

using namespace fermidec;
using testutil::state_of;

TEST_CASE("kraus pair is complete") {
    for (double p : {0.0, 0.25, 0.5, 0.9, 1.0}) {
        const KrausPair k = kraus_pair(p);
        const Matrix6d sum = k.k0.transpose() * k.k0 + k.k1.transpose() * k.k1;
        CHECK((sum - Matrix6d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    }
    CHECK_THROWS_AS(kraus_pair(-0.01), BadProbability);
    CHECK_THROWS_AS(kraus_pair(1.01), BadProbability);
}

TEST_CASE("damping probability saturates exponentially") {
    const ADCParams params{0.5};
    CHECK(p_of_t(0.0, params) == 0.0);
    CHECK(std::abs(p_of_t(2.0, params) - (1.0 - std::exp(-1.0))) < 1e-15);
    CHECK(p_of_t(1e9, params) == 1.0);
}

TEST_CASE("the bottom of the ladder and the singlet never damp") {
    for (int idx : {4, 5}) {
        Vector6 v = Vector6::Zero();
        v(idx) = 1.0;
        const AngMomState psi = make_state(v);
        const DensityMatrix6 fixed = density_from_pure(psi);
        for (double p : {0.0, 0.3, 1.0}) {
            const DensityMatrix6 rho = adc_evolve_pure(psi, p);
            CHECK((rho.rho - fixed.rho).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("each multiplet level steps down by one at p equal one") {
    for (int idx = 0; idx < 4; ++idx) {
        Vector6 v = Vector6::Zero();
        v(idx) = 1.0;
        const DensityMatrix6 rho = adc_evolve_pure(make_state(v), 1.0);
        CHECK(std::abs(rho.rho(idx + 1, idx + 1) - 1.0) < 1e-15);
        CHECK(std::abs(rho.rho.trace().real() - 1.0) < 1e-15);
    }
}

TEST_CASE("pure and kraus evolutions agree") {
    SplitMix64 rng{31};
    for (double p : {0.1, 0.45, 0.8}) {
        const AngMomState psi = testutil::random_complex_state(rng);
        const DensityMatrix6 a = adc_evolve_pure(psi, p);
        const DensityMatrix6 b = adc_evolve(density_from_pure(psi), p);
        CHECK((a.rho - b.rho).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("trace is preserved on mixed input") {
    SplitMix64 rng{32};
    const DensityMatrix6 rho0 = testutil::random_mixed_density(rng, 4);
    for (double p : {0.0, 0.2, 0.6, 1.0}) {
        const DensityMatrix6 rho = adc_evolve(rho0, p);
        CHECK(std::abs(rho.rho.trace().real() - 1.0) < 1e-13);
        CHECK((rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
        CHECK_NOTHROW(validate_density(rho));
    }
}

TEST_CASE("adc_asymptotic equals full damping") {
    SplitMix64 rng{33};
    for (int k = 0; k < 20; ++k) {
        const AngMomState psi = testutil::random_complex_state(rng);
        const DensityMatrix6 direct = adc_asymptotic(psi);
        const DensityMatrix6 damped = adc_evolve_pure(psi, 1.0);
        CHECK((direct.rho - damped.rho).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("uniform noise damps to the known ladder profile") {
    DensityMatrix6 mixed;
    mixed.rho = Matrix6::Identity() / 6.0;
    const DensityMatrix6 rho = adc_evolve(mixed, 1.0);
    const double third = 1.0 / 6.0;
    Matrix6 expected = Matrix6::Zero();
    expected(1, 1) = third;
    expected(2, 2) = third;
    expected(3, 3) = third;
    expected(4, 4) = 2.0 * third;
    expected(5, 5) = third;
    CHECK((rho.rho - expected).cwiseAbs().maxCoeff() < 1e-15);
}

// The damping maps compose as a semigroup only on the subspace the cascade
// cannot leave: span of the two fixed points and the level feeding them.
TEST_CASE("composition law holds on the terminal span") {
    Vector6 v = Vector6::Zero();
    v(3) = 0.6;
    v(4) = Complex(0.48, 0.36);
    v(5) = Complex(0.0, 0.536656314599949495);
    const AngMomState psi = make_state(v);

    const double p1 = 0.35, p2 = 0.55;
    const DensityMatrix6 step = adc_evolve(adc_evolve_pure(psi, p1), p2);
    const DensityMatrix6 once = adc_evolve_pure(psi, 1.0 - (1.0 - p1) * (1.0 - p2));
    CHECK((step.rho - once.rho).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("composition law fails off the terminal span") {
    const AngMomState psi = state_of({1, 1, 0, 0, 0, 0});
    const double p1 = 0.35, p2 = 0.55;
    const DensityMatrix6 step = adc_evolve(adc_evolve_pure(psi, p1), p2);
    const DensityMatrix6 once = adc_evolve_pure(psi, 1.0 - (1.0 - p1) * (1.0 - p2));
    CHECK((step.rho - once.rho).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("worked endpoint example") {
    const AngMomState psi = state_of({std::sqrt(0.5), 0, 0, 0, std::sqrt(0.3), std::sqrt(0.2)});
    const DensityMatrix6 inf = adc_asymptotic(psi);
    CHECK(std::abs(concurrence(inf).value - 0.2) < 1e-12);
    const double expected_k = 0.2 + 2.0 * std::sqrt(2.0) * std::sqrt(0.3 * 0.2);
    CHECK(std::abs(coherence(inf) - expected_k) < 1e-12);
    CHECK(std::abs(von_neumann_entropy(inf) - std::log(2.0)) < 1e-12);
    CHECK(std::abs(purity(inf) - 0.5) < 1e-12);
}
