#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tgi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Relative singular-value cutoff used for every rank decision unless overridden.
inline constexpr double kDefaultRankTol = 1e-10;

/// Invertibility certificate tolerance for transforms: ||M Minv - I||_2 <= tol ||M||_2.
inline constexpr double kDefaultInvTol = 1e-8;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes that do not conform for the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A factorization failed, or the input violates a numerical precondition
/// (singular splitting, spectral radius too large, failed certificate).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Right-hand side outside the range required by a direct solution formula.
class InconsistentSystemError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace tgi
