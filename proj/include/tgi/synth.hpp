#pragma once

#include <cstdint>

#include "tgi/mproduct.hpp"
#include "tgi/rng.hpp"

// Seeded random test data. Tensors are assembled in the transform domain and
// mapped back with Minv, so their slice structure is known exactly.

namespace tgi::synth {

/// Entries with independent standard normal real and imaginary parts.
Matrix randomMatrix(Index rows, Index cols, Rng& rng);
Tensor3 randomTensor(Index m, Index n, Index p, std::uint64_t seed);

/// Haar-like unitary from the QR factorization of a random matrix.
Matrix randomUnitary(Index n, Rng& rng);

/// n x n matrix of index k: S blkdiag(C, J_k(0)) S^{-1} with C invertible
/// (eigenvalue moduli in [1, 2]) and S well conditioned. k = 0 gives an
/// invertible matrix; requires k <= n.
Matrix randomIndexMatrix(Index n, Index k, Rng& rng);

/// m x m x p tensor whose first transform-domain slice has index k and whose
/// other slices have indices drawn from [0, k]; the tubal index is k.
Tensor3 randomIndexTensor(Index m, Index p, Index k, const Transform& t, std::uint64_t seed);

/// Tensor whose transform-domain slices are strictly diagonally dominant.
Tensor3 diagDominantTensor(Index n, Index p, const Transform& t, std::uint64_t seed);

} // namespace tgi::synth
