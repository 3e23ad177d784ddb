#pragma once

#include "tgi/types.hpp"

namespace tgi {

/**
 * Invertible p x p matrix M defining the M-product, with its inverse cached.
 *
 * Construction computes the inverse once and certifies it with
 * ||M Minv - I||_2 <= invTol * ||M||_2; a failed certificate throws
 * NumericalError. Real matrices are promoted to complex.
 */
class Transform {
public:
    explicit Transform(Matrix m, double invTol = kDefaultInvTol);

    Index size() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }
    const Matrix& inverse() const noexcept { return minv_; }
    double invTol() const noexcept { return invTol_; }

    /// ||M Minv - I||_2 / ||M||_2 measured at construction.
    double certificate() const noexcept { return certificate_; }

    /// Relative certificate for an arbitrary square matrix; +inf if the
    /// inverse is not finite.
    static double inverseResidual(const Matrix& m, const Matrix& minv);

private:
    Matrix m_;
    Matrix minv_;
    double invTol_;
    double certificate_;
};

} // namespace tgi
