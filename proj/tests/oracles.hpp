#pragma once

// Test-side reference computations. None of these call the library's matrix
// kernel: transforms are explicit loops, and the big block-matrix inverses use
// QR-based formulas (Cline's full-rank factorization for Drazin, an orthonormal
// basis of R(A^k) for core-EP) instead of SVD pseudo-inverses.

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "tgi/tensor3.hpp"

namespace tgi::oracle {

/// C_{ijk} = sum_s A_{ijs} B_{ks} by direct summation.
inline Tensor3 mode3Loop(const Tensor3& a, const Matrix& b)
{
    Tensor3 c(a.rows(), a.cols(), a.depth());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            for (Index k = 0; k < a.depth(); ++k) {
                Complex sum = 0.0;
                for (Index s = 0; s < a.depth(); ++s) {
                    sum += a(i, j, s) * b(k, s);
                }
                c(i, j, k) = sum;
            }
        }
    }
    return c;
}

inline Matrix explicitInverse(const Matrix& m) { return m.fullPivLu().inverse(); }

/// Block-diagonal matrix of the slices of A x_3 M.
inline Matrix blockMatrix(const Tensor3& a, const Matrix& m)
{
    const Tensor3 tilde = mode3Loop(a, m);
    Matrix big = Matrix::Zero(a.rows() * a.depth(), a.cols() * a.depth());
    for (Index k = 0; k < a.depth(); ++k) {
        for (Index i = 0; i < a.rows(); ++i) {
            for (Index j = 0; j < a.cols(); ++j) {
                big(k * a.rows() + i, k * a.cols() + j) = tilde(i, j, k);
            }
        }
    }
    return big;
}

/// Inverse of blockMatrix: diagonal blocks mapped back with M^{-1}.
inline Tensor3 fromBlockMatrix(const Matrix& big, Index m, Index n, const Matrix& mm)
{
    const Index p = big.rows() / m;
    Tensor3 tilde(m, n, p);
    for (Index k = 0; k < p; ++k) {
        for (Index i = 0; i < m; ++i) {
            for (Index j = 0; j < n; ++j) {
                tilde(i, j, k) = big(k * m + i, k * n + j);
            }
        }
    }
    return mode3Loop(tilde, explicitInverse(mm));
}

inline Index svdRank(const Matrix& a, double tol)
{
    Eigen::JacobiSVD<Matrix> svd(a);
    Index r = 0;
    for (Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()[i] > tol) {
            ++r;
        }
    }
    return r;
}

struct IndexInfo {
    Index k = 0;
    Index rank = 0; ///< rank(A^k)
};

/// Index from ranks of powers of A / ||A||_2, with an absolute cutoff.
inline IndexInfo index(const Matrix& a, double tol = 1e-9)
{
    const Index n = a.rows();
    const double scale = Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
    if (scale == 0.0) {
        return {1, 0};
    }
    const Matrix u = a / scale;
    Matrix power = Matrix::Identity(n, n);
    Index prev = n;
    for (Index k = 0; k <= n; ++k) {
        const Matrix next = power * u;
        const Index r = svdRank(next, tol);
        if (r == prev) {
            return {k, prev};
        }
        prev = r;
        power = next;
    }
    return {n, prev};
}

/// Drazin inverse by Cline's formula: with A^k = B C a full-rank
/// factorization, A^D = B (C A B)^{-1} C.
inline Matrix drazin(const Matrix& a, double tol = 1e-9)
{
    const Index n = a.rows();
    const double scale = Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
    if (scale == 0.0) {
        return Matrix::Zero(n, n);
    }
    const Matrix u = a / scale;
    const auto info = index(a, tol);
    if (info.rank == 0) {
        return Matrix::Zero(n, n);
    }
    Matrix power = Matrix::Identity(n, n);
    for (Index i = 0; i < info.k; ++i) {
        power = power * u;
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(power);
    const Matrix q = qr.householderQ();
    const Matrix r = qr.matrixR().triangularView<Eigen::Upper>();
    const Matrix b = q.leftCols(info.rank);
    const Matrix c = (r * qr.colsPermutation().transpose()).topRows(info.rank);
    const Matrix core = c * u * b;
    return b * core.fullPivLu().inverse() * c / scale;
}

/// Core-EP inverse Q (Q^H A Q)^{-1} Q^H with Q an orthonormal basis of R(A^k).
inline Matrix coreEP(const Matrix& a, double tol = 1e-9)
{
    const Index n = a.rows();
    const double scale = Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
    if (scale == 0.0) {
        return Matrix::Zero(n, n);
    }
    const Matrix u = a / scale;
    const auto info = index(a, tol);
    if (info.rank == 0) {
        return Matrix::Zero(n, n);
    }
    Matrix power = Matrix::Identity(n, n);
    for (Index i = 0; i < std::max<Index>(info.k, 1); ++i) {
        power = power * u;
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(power);
    const Matrix q = Matrix(qr.householderQ()).leftCols(info.rank);
    const Matrix core = q.adjoint() * u * q;
    return q * core.fullPivLu().inverse() * q.adjoint() / scale;
}

/// Moore-Penrose inverse via complete orthogonal decomposition.
inline Matrix pinv(const Matrix& a, double tol = 1e-10)
{
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
    cod.setThreshold(tol);
    return cod.pseudoInverse();
}

} // namespace tgi::oracle
