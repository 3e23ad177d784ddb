#pragma once

#include <vector>

#include "tgi/tensor3.hpp"
#include "tgi/transform.hpp"

namespace tgi {

/// A tensor in the transform domain: the p frontal slices of A x_3 M.
struct SliceSpectrum {
    Index m = 0;
    Index n = 0;
    Index p = 0;
    std::vector<Matrix> slices;
};

/// (A x_3 B)_{ijk} = sum_s A_{ijs} B_{ks} for square p x p B.
Tensor3 mode3Product(const Tensor3& a, const Matrix& b);

SliceSpectrum toTransformDomain(const Tensor3& a, const Transform& t);
Tensor3 fromTransformDomain(const SliceSpectrum& s, const Transform& t);

/// Block-diagonal mp x np matrix of the transform-domain slices.
Matrix matOf(const Tensor3& a, const Transform& t);

/// Inverse of matOf: takes the p diagonal m x n blocks (off-diagonal blocks
/// are ignored) and maps them back with Minv.
Tensor3 matInvOf(const Matrix& blocks, Index m, Index n, const Transform& t);

/// A *_M B, computed slice-wise in the transform domain.
Tensor3 mProduct(const Tensor3& a, const Tensor3& b, const Transform& t);

/// A^s under the M-product; A^0 is the identity tensor.
Tensor3 mPower(const Tensor3& a, Index s, const Transform& t);

/// Tensor whose transform-domain slices are all I_m.
Tensor3 identityTensor(Index m, const Transform& t);

/// A^H: transform-domain slices are the conjugate transposes of those of A.
Tensor3 conjTranspose(const Tensor3& a, const Transform& t);

/// max_i ||(A x_3 M)^(i)||_2.
double tubalNorm(const Tensor3& a, const Transform& t);

/// Per-slice ranks and matrix indices of the transform-domain slices.
struct IndexProfile {
    std::vector<Index> ranks;
    std::vector<Index> indices; ///< raw matrix indices; 0 for invertible slices
    Index tubalIndex = 0;       ///< max over indices
    double rankTol = kDefaultRankTol;

    /// Tubal index used in Drazin-type formulas: invertible slices count as
    /// index 1, so this is max(tubalIndex, 1).
    Index drazinIndex() const { return tubalIndex < 1 ? 1 : tubalIndex; }
};

/// Ranks of the transform-domain slices; any shape.
std::vector<Index> multirank(const Tensor3& a, const Transform& t, double rankTol = kDefaultRankTol);

/// Multirank plus per-slice indices; requires m = n.
IndexProfile indexProfile(const Tensor3& a, const Transform& t, double rankTol = kDefaultRankTol);

/// Largest eigenvalue modulus over the transform-domain slices.
double spectralRadius(const Tensor3& a, const Transform& t);

/// True iff every transform-domain slice is strictly row diagonally dominant.
bool isDiagDominant(const Tensor3& a, const Transform& t);

/// B in R_M(A^k): every column of every transform-domain slice of B lies in the
/// range of the corresponding slice of A^k. The least-squares residual of each
/// slice must be at most tol times the largest slice norm of B x_3 M (the
/// data scale, so slices that are zero up to roundoff still pass).
/// k = 0 is always true.
bool inRangeOfPower(const Tensor3& a, Index k, const Tensor3& b, const Transform& t,
                    double tol = 1e-8, double rankTol = kDefaultRankTol);

} // namespace tgi
