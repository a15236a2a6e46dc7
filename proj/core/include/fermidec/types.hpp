#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fermidec {

using Complex = std::complex<double>;
using Vector6 = Eigen::Matrix<Complex, 6, 1>;
using Matrix6 = Eigen::Matrix<Complex, 6, 6>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

}  // namespace fermidec
