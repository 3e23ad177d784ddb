#pragma once

#include <vector>

#include "tgi/types.hpp"

// Dense complex matrix primitives that the per-slice tensor algorithms reduce to.
//
// Rank decisions follow one convention: a singular value counts when it exceeds
// rankTol times the largest singular value. For powers A^j the threshold is
// taken relative to ||A||_2^j, which keeps the decision stable when A^j itself
// is roundoff-sized (powers of nilpotent slices).

namespace tgi {

std::vector<double> singularValues(const Matrix& a);

/// Largest singular value; 0 for an empty or zero matrix.
double spectralNorm(const Matrix& a);

/// Number of singular values above rankTol * sigma_max.
Index numericalRank(const Matrix& a, double rankTol = kDefaultRankTol);

/// Moore-Penrose inverse via SVD, discarding singular values at or below
/// rankTol * sigma_max.
Matrix pinv(const Matrix& a, double rankTol = kDefaultRankTol);

/// Moore-Penrose inverse keeping exactly the `rank` largest singular values.
Matrix pinvOfRank(const Matrix& a, Index rank);

/// a^s for s >= 0 (a^0 = I).
Matrix matrixPower(const Matrix& a, Index s);

struct MatrixIndexResult {
    Index k = 0;
    /// rank(A^0), ..., rank(A^{k+1}); strictly decreasing up to position k,
    /// then equal.
    std::vector<Index> rankSequence;

    /// rank(A^j) for every j >= k.
    Index stableRank() const { return rankSequence.back(); }
};

/// Smallest k >= 0 with rank(A^k) = rank(A^{k+1}).
MatrixIndexResult matrixIndex(const Matrix& a, double rankTol = kDefaultRankTol);

/// Drazin inverse A^k (A^{2k+1})^+ A^k with k = ind(A).
Matrix matrixDrazin(const Matrix& a, double rankTol = kDefaultRankTol);

/// Drazin inverse with a precomputed index.
Matrix matrixDrazin(const Matrix& a, const MatrixIndexResult& index);

/// Core-EP inverse A^D A^l (A^l)^+ with l = max(k, 1). Requires k >= ind(A).
Matrix matrixCoreEP(const Matrix& a, Index k, double rankTol = kDefaultRankTol);

/// Core-EP inverse with a precomputed index (l = max(index.k, 1)).
Matrix matrixCoreEP(const Matrix& a, const MatrixIndexResult& index);

/// All eigenvalues with multiplicity, unordered.
std::vector<Complex> eigvals(const Matrix& a);

/// max |lambda| over eigvals(a).
double matrixSpectralRadius(const Matrix& a);

struct LstsqResult {
    Vector x;
    double residual = 0.0; ///< ||A x - b||_2
};

/// Minimum-norm least-squares solution pinv(A, rankTol) b.
LstsqResult lstsq(const Matrix& a, const Vector& b, double rankTol = kDefaultRankTol);

/// Largest distance (2-norm) from a column of b to the span of the leading
/// `rank` left singular vectors of a.
double rangeResidual(const Matrix& a, Index rank, const Matrix& b);

} // namespace tgi
