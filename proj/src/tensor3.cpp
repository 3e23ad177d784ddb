#include "tgi/tensor3.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tgi {

namespace {

void requirePositive(Index m, Index n, Index p)
{
    if (m <= 0 || n <= 0 || p <= 0) {
        throw DimensionError("Tensor3: dimensions must be positive, got " + std::to_string(m) +
                             "x" + std::to_string(n) + "x" + std::to_string(p));
    }
}

} // namespace

Tensor3::Tensor3(Index m, Index n, Index p) : m_(m), n_(n), p_(p)
{
    requirePositive(m, n, p);
    data_.assign(static_cast<std::size_t>(m * n * p), Complex(0.0));
}

Tensor3::Tensor3(Index m, Index n, Index p, std::vector<Complex> entries)
    : m_(m), n_(n), p_(p), data_(std::move(entries))
{
    requirePositive(m, n, p);
    if (static_cast<Index>(data_.size()) != m * n * p) {
        throw DimensionError("Tensor3: expected " + std::to_string(m * n * p) + " entries, got " +
                             std::to_string(data_.size()));
    }
}

Tensor3 Tensor3::fromSlices(std::span<const Matrix> slices)
{
    if (slices.empty()) {
        throw DimensionError("Tensor3::fromSlices: no slices");
    }
    Tensor3 t(slices.front().rows(), slices.front().cols(), static_cast<Index>(slices.size()));
    for (Index k = 0; k < t.p_; ++k) {
        t.setSlice(k, slices[static_cast<std::size_t>(k)]);
    }
    return t;
}

SliceMap Tensor3::sliceView(Index k)
{
    return SliceMap(data_.data() + k * m_ * n_, m_, n_);
}

ConstSliceMap Tensor3::sliceView(Index k) const
{
    return ConstSliceMap(data_.data() + k * m_ * n_, m_, n_);
}

void Tensor3::setSlice(Index k, const Matrix& value)
{
    if (value.rows() != m_ || value.cols() != n_) {
        throw DimensionError("Tensor3::setSlice: slice must be " + std::to_string(m_) + "x" +
                             std::to_string(n_));
    }
    if (k < 0 || k >= p_) {
        throw DimensionError("Tensor3::setSlice: slice index out of range");
    }
    sliceView(k) = value;
}

double Tensor3::frobeniusNorm() const
{
    double sum = 0.0;
    for (const auto& z : data_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double Tensor3::maxAbs() const
{
    double best = 0.0;
    for (const auto& z : data_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

bool Tensor3::isReal(double tol) const
{
    return std::all_of(data_.begin(), data_.end(),
                       [tol](const Complex& z) { return std::abs(z.imag()) <= tol; });
}

void Tensor3::requireSameShape(const Tensor3& rhs, const char* op) const
{
    if (!sameShape(rhs)) {
        throw DimensionError(std::string("Tensor3 ") + op + ": shape mismatch");
    }
}

Tensor3& Tensor3::operator+=(const Tensor3& rhs)
{
    requireSameShape(rhs, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& rhs)
{
    requireSameShape(rhs, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

Tensor3& Tensor3::operator*=(Complex s)
{
    for (auto& z : data_) {
        z *= s;
    }
    return *this;
}

double maxAbsDiff(const Tensor3& a, const Tensor3& b)
{
    return (a - b).maxAbs();
}

double relativeError(const Tensor3& a, const Tensor3& ref)
{
    const double diff = (a - ref).frobeniusNorm();
    const double scale = ref.frobeniusNorm();
    return scale > 0.0 ? diff / scale : diff;
}

} // namespace tgi
