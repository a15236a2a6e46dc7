#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "fermidec/quadrature.hpp"
#include "fermidec/errors.hpp"

using namespace fermidec;

TEST_CASE("low order polynomials need a single panel") {
    const QuadratureResult r = integrate([](double x) { return x * x; }, 0.0, 3.0, 1e-12);
    CHECK(std::abs(r.value - 9.0) < 1e-13);
    CHECK(r.panels == 1);
}

TEST_CASE("smooth exponential tail") {
    const QuadratureResult r = integrate([](double x) { return std::exp(-x); }, 0.0, 60.0, 1e-12);
    CHECK(std::abs(r.value - (1.0 - std::exp(-60.0))) < 1e-12);
}

TEST_CASE("oscillatory integrand") {
    const double upper = 10.0 * std::numbers::pi;
    const QuadratureResult r =
        integrate([](double x) { const double s = std::sin(x); return s * s; }, 0.0, upper, 1e-12);
    CHECK(std::abs(r.value - 0.5 * upper) < 1e-10);
}

TEST_CASE("a sharp peak forces refinement near the spike") {
    const double a = 1e-3;
    const QuadratureResult r =
        integrate([a](double x) { return 1.0 / (x * x + a * a); }, -1.0, 1.0, 1e-10);
    const double exact = 2.0 / a * std::atan(1.0 / a);
    CHECK(std::abs(r.value - exact) / exact < 1e-9);
    CHECK(r.panels > 8);
}

TEST_CASE("error estimate is honest for a hard integrand") {
    const QuadratureResult r =
        integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
    CHECK(std::abs(r.value - 2.0 / 3.0) <= std::max(r.error * 10.0, 1e-12));
}

TEST_CASE("empty interval integrates to zero") {
    const QuadratureResult r = integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-12);
    CHECK(r.value == 0.0);
    CHECK(r.panels == 0);
}

TEST_CASE("a tight tolerance with a tiny budget exhausts the panels") {
    CHECK_THROWS_AS(integrate([](double x) { return std::exp(-x); }, 0.0, 10.0, 1e-12, 3),
                    QuadratureFailure);
}

TEST_CASE("tolerances finer than double precision are refused") {
    CHECK_THROWS_AS(integrate([](double x) { return std::exp(-x); }, 0.0, 1.0, 1e-30),
                    QuadratureFailure);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, 0.0), QuadratureFailure);
}

TEST_CASE("non finite integrand values are reported, not returned") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, -1.0, 1.0, 1e-10),
                    QuadratureFailure);
    CHECK_THROWS_AS(
        integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0,
                  1e-10),
        QuadratureFailure);
}
