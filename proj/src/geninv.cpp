#include "tgi/geninv.hpp"

#include <algorithm>
#include <limits>

#include "tgi/matrix_kernel.hpp"
#include "tgi/parallel.hpp"

namespace tgi {

namespace {

void requireSquare(const Tensor3& a, const char* op)
{
    if (!a.isSquare()) {
        throw DimensionError(std::string(op) + ": frontal slices must be square, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

double sliceWork(Index n) { return static_cast<double>(n * n * n) * 20.0; }

template <typename Fn>
Tensor3 mapSlices(const Tensor3& a, const Transform& t, Index outRows, Index outCols, Fn&& fn)
{
    const auto s = toTransformDomain(a, t);
    SliceSpectrum out{outRows, outCols, s.p, std::vector<Matrix>(s.slices.size())};
    parallel::forEachSlice(s.p, sliceWork(std::max(s.m, s.n)),
                           [&](std::ptrdiff_t k) { out.slices[k] = fn(s.slices[k]); });
    return fromTransformDomain(out, t);
}

double maxNorm(const std::vector<double>& values)
{
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

} // namespace

InverseKind parseInverseKind(std::string_view name)
{
    if (name == "mp") {
        return InverseKind::Mp;
    }
    if (name == "drazin") {
        return InverseKind::Drazin;
    }
    if (name == "core-ep") {
        return InverseKind::CoreEP;
    }
    if (name == "dmp") {
        return InverseKind::Dmp;
    }
    if (name == "mpd") {
        return InverseKind::Mpd;
    }
    if (name == "cmp") {
        return InverseKind::Cmp;
    }
    throw DimensionError("unknown inverse kind '" + std::string(name) +
                         "' (expected mp, drazin, core-ep, dmp, mpd or cmp)");
}

std::string toString(InverseKind kind)
{
    switch (kind) {
    case InverseKind::Mp:
        return "mp";
    case InverseKind::Drazin:
        return "drazin";
    case InverseKind::CoreEP:
        return "core-ep";
    case InverseKind::Dmp:
        return "dmp";
    case InverseKind::Mpd:
        return "mpd";
    case InverseKind::Cmp:
        return "cmp";
    }
    return {};
}

Tensor3 mpInverse(const Tensor3& a, const Transform& t, double rankTol)
{
    return mapSlices(a, t, a.cols(), a.rows(),
                     [rankTol](const Matrix& slice) { return pinv(slice, rankTol); });
}

DrazinResult drazinInverse(const Tensor3& a, const Transform& t, double rankTol)
{
    requireSquare(a, "drazinInverse");
    const auto s = toTransformDomain(a, t);
    std::vector<MatrixIndexResult> indices(s.slices.size());
    SliceSpectrum out{s.m, s.n, s.p, std::vector<Matrix>(s.slices.size())};
    parallel::forEachSlice(s.p, sliceWork(s.m), [&](std::ptrdiff_t k) {
        indices[k] = matrixIndex(s.slices[k], rankTol);
        out.slices[k] = matrixDrazin(s.slices[k], indices[k]);
    });

    IndexProfile profile;
    profile.rankTol = rankTol;
    for (const auto& idx : indices) {
        profile.ranks.push_back(idx.rankSequence.at(1));
        profile.indices.push_back(idx.k);
        profile.tubalIndex = std::max(profile.tubalIndex, idx.k);
    }
    return {fromTransformDomain(out, t), std::move(profile)};
}

Tensor3 coreEPInverse(const Tensor3& a, const Transform& t, double rankTol)
{
    requireSquare(a, "coreEPInverse");
    return mapSlices(a, t, a.rows(), a.cols(), [rankTol](const Matrix& slice) {
        return matrixCoreEP(slice, matrixIndex(slice, rankTol));
    });
}

Tensor3 compositeInverse(const Tensor3& a, InverseKind kind, const Transform& t, double rankTol)
{
    requireSquare(a, "compositeInverse");
    if (kind != InverseKind::Dmp && kind != InverseKind::Mpd && kind != InverseKind::Cmp) {
        throw DimensionError("compositeInverse: kind must be dmp, mpd or cmp, got " +
                             toString(kind));
    }
    // The M-product is slice-wise in the transform domain, so each composite is
    // assembled from the slice inverses.
    return mapSlices(a, t, a.rows(), a.cols(), [kind, rankTol](const Matrix& slice) -> Matrix {
        const Matrix dagger = pinv(slice, rankTol);
        const Matrix drazin = matrixDrazin(slice, rankTol);
        switch (kind) {
        case InverseKind::Dmp:
            return drazin * slice * dagger;
        case InverseKind::Mpd:
            return dagger * slice * drazin;
        default:
            return dagger * slice * drazin * slice * dagger;
        }
    });
}

Tensor3 generalizedInverse(const Tensor3& a, InverseKind kind, const Transform& t, double rankTol)
{
    switch (kind) {
    case InverseKind::Mp:
        return mpInverse(a, t, rankTol);
    case InverseKind::Drazin:
        return drazinInverse(a, t, rankTol).inverse;
    case InverseKind::CoreEP:
        return coreEPInverse(a, t, rankTol);
    default:
        return compositeInverse(a, kind, t, rankTol);
    }
}

ResidualSuite residualSuite(const Tensor3& a, const Tensor3& x, Index k, const Transform& t)
{
    if (x.rows() != a.cols() || x.cols() != a.rows() || x.depth() != a.depth()) {
        throw DimensionError("residualSuite: X must have shape " + std::to_string(a.cols()) + "x" +
                             std::to_string(a.rows()) + "x" + std::to_string(a.depth()));
    }
    if (k < 0) {
        throw DimensionError("residualSuite: negative power");
    }
    const auto sa = toTransformDomain(a, t);
    const auto sx = toTransformDomain(x, t);
    const bool square = a.isSquare();
    const auto p = static_cast<std::size_t>(sa.p);
    std::vector<double> e1(p), e2(p), e3(p), e4(p), e5(p), e1k(p), e7(p);

    // Each residual tensor's transform-domain slices are the slice residuals,
    // so its tubal norm is the largest slice spectral norm.
    parallel::forEachSlice(sa.p, sliceWork(std::max(sa.m, sa.n)) * (k + 2.0),
                           [&](std::ptrdiff_t i) {
        const Matrix& as = sa.slices[i];
        const Matrix& xs = sx.slices[i];
        const Matrix ax = as * xs;
        const Matrix xa = xs * as;
        e1[i] = spectralNorm(as - ax * as);
        e2[i] = spectralNorm(xs - xs * ax);
        e3[i] = spectralNorm(ax - ax.adjoint());
        e4[i] = spectralNorm(xa - xa.adjoint());
        if (square) {
            const Matrix ak = matrixPower(as, k);
            e5[i] = spectralNorm(ax - xa);
            e1k[i] = spectralNorm(xs * ak * as - ak);
            e7[i] = spectralNorm(ax * xs - xs);
        }
    });

    const double nan = std::numeric_limits<double>::quiet_NaN();
    ResidualSuite r;
    r.e1 = maxNorm(e1);
    r.e2 = maxNorm(e2);
    r.e3 = maxNorm(e3);
    r.e4 = maxNorm(e4);
    r.e5 = square ? maxNorm(e5) : nan;
    r.e1k = square ? maxNorm(e1k) : nan;
    r.e7 = square ? maxNorm(e7) : nan;
    return r;
}

} // namespace tgi
