#pragma once

#include <string>
#include <string_view>

#include "tgi/mproduct.hpp"

namespace tgi {

enum class InverseKind { Mp, Drazin, CoreEP, Dmp, Mpd, Cmp };

/// Accepts mp, drazin, core-ep, dmp, mpd, cmp.
InverseKind parseInverseKind(std::string_view name);
std::string toString(InverseKind kind);

/// Tubal norms of the residual tensors used to judge a computed inverse X.
/// E3 and E4 use the conjugate transpose. e5, e1k and e7 need square A and
/// are NaN otherwise.
struct ResidualSuite {
    double e1 = 0.0;  ///< ||A - A X A||
    double e2 = 0.0;  ///< ||X - X A X||
    double e3 = 0.0;  ///< ||A X - (A X)^H||
    double e4 = 0.0;  ///< ||X A - (X A)^H||
    double e5 = 0.0;  ///< ||A X - X A||
    double e1k = 0.0; ///< ||X A^{k+1} - A^k||
    double e7 = 0.0;  ///< ||A X^2 - X||
};

Tensor3 mpInverse(const Tensor3& a, const Transform& t, double rankTol = kDefaultRankTol);

struct DrazinResult {
    Tensor3 inverse;
    IndexProfile profile;
};

/// Slice-wise matrix Drazin inverses in the transform domain.
DrazinResult drazinInverse(const Tensor3& a, const Transform& t, double rankTol = kDefaultRankTol);

Tensor3 coreEPInverse(const Tensor3& a, const Transform& t, double rankTol = kDefaultRankTol);

/// DMP = A^D A A^+, MPD = A^+ A A^D, CMP = A^+ A A^D A A^+.
/// Throws DimensionError for any other kind.
Tensor3 compositeInverse(const Tensor3& a, InverseKind kind, const Transform& t,
                         double rankTol = kDefaultRankTol);

/// Dispatches to the inverse of the requested kind.
Tensor3 generalizedInverse(const Tensor3& a, InverseKind kind, const Transform& t,
                           double rankTol = kDefaultRankTol);

/// Evaluates all residuals for X against A; k is the power used in E1k.
ResidualSuite residualSuite(const Tensor3& a, const Tensor3& x, Index k, const Transform& t);

} // namespace tgi
