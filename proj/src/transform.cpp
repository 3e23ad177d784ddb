#include "tgi/transform.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tgi/matrix_kernel.hpp"

namespace tgi {

double Transform::inverseResidual(const Matrix& m, const Matrix& minv)
{
    if (!minv.allFinite()) {
        return std::numeric_limits<double>::infinity();
    }
    const Matrix defect = m * minv - Matrix::Identity(m.rows(), m.cols());
    const double scale = spectralNorm(m);
    if (scale == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return spectralNorm(defect) / scale;
}

Transform::Transform(Matrix m, double invTol) : m_(std::move(m)), invTol_(invTol)
{
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw DimensionError("Transform: M must be a non-empty square matrix");
    }
    if (!m_.allFinite()) {
        throw NumericalError("Transform: M has non-finite entries");
    }
    const Eigen::FullPivLU<Matrix> lu(m_);
    if (!lu.isInvertible()) {
        throw NumericalError("Transform: M is singular");
    }
    minv_ = lu.inverse();
    certificate_ = inverseResidual(m_, minv_);
    if (!(certificate_ <= invTol_)) {
        std::ostringstream msg;
        msg << "Transform: invertibility certificate failed (||M Minv - I|| / ||M|| = "
            << certificate_ << ", tolerance " << invTol_ << ")";
        throw NumericalError(msg.str());
    }
}

} // namespace tgi
