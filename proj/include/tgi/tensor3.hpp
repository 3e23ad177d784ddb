#pragma once

#include <span>
#include <vector>

#include "tgi/types.hpp"

namespace tgi {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SliceMap = Eigen::Map<RowMajorMatrix>;
using ConstSliceMap = Eigen::Map<const RowMajorMatrix>;

/**
 * Dense complex m x n x p tensor.
 *
 * Entries are stored slice-major: the p frontal slices follow each other in
 * memory and each m x n slice is row-major. Indices are zero-based.
 */
class Tensor3 {
public:
    /// Zero tensor. All dimensions must be positive.
    Tensor3(Index m, Index n, Index p);

    /// Takes ownership of m*n*p entries in slice-major/row-major order.
    Tensor3(Index m, Index n, Index p, std::vector<Complex> entries);

    /// Stacks equally shaped matrices as frontal slices.
    static Tensor3 fromSlices(std::span<const Matrix> slices);

    Index rows() const noexcept { return m_; }
    Index cols() const noexcept { return n_; }
    Index depth() const noexcept { return p_; }
    Index size() const noexcept { return m_ * n_ * p_; }
    bool isSquare() const noexcept { return m_ == n_; }
    bool sameShape(const Tensor3& other) const noexcept
    {
        return m_ == other.m_ && n_ == other.n_ && p_ == other.p_;
    }

    Complex& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
    const Complex& operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

    /// View of frontal slice k (the k-th m x n block of storage).
    SliceMap sliceView(Index k);
    ConstSliceMap sliceView(Index k) const;

    Matrix slice(Index k) const { return sliceView(k); }
    void setSlice(Index k, const Matrix& value);

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    double frobeniusNorm() const;
    double maxAbs() const;
    bool isReal(double tol = 0.0) const;

    Tensor3& operator+=(const Tensor3& rhs);
    Tensor3& operator-=(const Tensor3& rhs);
    Tensor3& operator*=(Complex s);

    friend Tensor3 operator+(Tensor3 lhs, const Tensor3& rhs) { return lhs += rhs; }
    friend Tensor3 operator-(Tensor3 lhs, const Tensor3& rhs) { return lhs -= rhs; }
    friend Tensor3 operator*(Tensor3 t, Complex s) { return t *= s; }
    friend Tensor3 operator*(Complex s, Tensor3 t) { return t *= s; }
    friend Tensor3 operator-(Tensor3 t) { return t *= Complex(-1.0); }

private:
    Index offset(Index i, Index j, Index k) const noexcept { return (k * m_ + i) * n_ + j; }
    void requireSameShape(const Tensor3& rhs, const char* op) const;

    Index m_;
    Index n_;
    Index p_;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
double maxAbsDiff(const Tensor3& a, const Tensor3& b);

/// ||a - ref||_F / ||ref||_F, or the absolute error when ref is zero.
double relativeError(const Tensor3& a, const Tensor3& ref);

} // namespace tgi
