#pragma once

#include <cstddef>
#include <functional>

namespace fermidec {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;        // summed absolute error estimate
    std::size_t panels = 0;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b]: bisect the worst panel until
// the accumulated error estimate drops below max(rel_tol * |value|, abs_floor).
// Throws QuadratureFailure when rel_tol is finer than double precision can
// certify (below 50 eps), when the panel budget runs out first, or when the
// integrand produces non-finite values.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, std::size_t max_panels = 20000,
                           double abs_floor = 1e-300);

}  // namespace fermidec
