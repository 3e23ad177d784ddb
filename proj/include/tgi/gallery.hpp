#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tgi/transform.hpp"

namespace tgi {

/// Unnormalized DFT matrix, M_{jk} = exp(-2 pi i jk / p) (zero-based); gives the t-product.
Transform dftTransform(Index p);

/// M = W^{-1} C (I + Z) with C the orthonormal DCT-II matrix, Z the ones on the
/// first superdiagonal and W = diag(C(:,1)); gives the c-product.
Transform dctTransform(Index p);

/// Entries uniform on [0,1) from Rng(seed). A matrix failing the certificate is
/// redrawn from seed+1, seed+2, ... at most 8 draws in total.
Transform randomInvertibleTransform(Index p, std::uint64_t seed);

Transform identityTransform(Index p);

/// Parsed form of the --transform grammar: dft | dct | identity | rand:<u64> | file:<path>.
struct TransformKind {
    enum class Tag { Dft, Dct, Random, File, Identity };

    Tag tag = Tag::Dft;
    std::uint64_t seed = 0;
    std::string path;

    static TransformKind parse(std::string_view spec);
    std::string toString() const;
};

/// Builds the transform for p slices. File transforms must be p x p.
Transform makeTransform(const TransformKind& kind, Index p);

} // namespace tgi
