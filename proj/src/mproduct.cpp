#include "tgi/mproduct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tgi/matrix_kernel.hpp"
#include "tgi/parallel.hpp"

namespace tgi {

namespace {

using StackedSlices = Eigen::Map<RowMajorMatrix>;
using ConstStackedSlices = Eigen::Map<const RowMajorMatrix>;

void requireDepth(const Tensor3& a, const Transform& t, const char* op)
{
    if (a.depth() != t.size()) {
        throw DimensionError(std::string(op) + ": tensor has " + std::to_string(a.depth()) +
                             " slices but the transform is " + std::to_string(t.size()) + "x" +
                             std::to_string(t.size()));
    }
}

void requireSquare(const Tensor3& a, const char* op)
{
    if (!a.isSquare()) {
        throw DimensionError(std::string(op) + ": frontal slices must be square, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

double cubicWork(Index m, Index n, Index q) { return static_cast<double>(m * n * q); }

} // namespace

Tensor3 mode3Product(const Tensor3& a, const Matrix& b)
{
    if (b.rows() != b.cols() || b.cols() != a.depth()) {
        throw DimensionError("mode3Product: expected a " + std::to_string(a.depth()) + "x" +
                             std::to_string(a.depth()) + " matrix, got " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    const Index p = a.depth();
    const Index sliceSize = a.rows() * a.cols();
    Tensor3 c(a.rows(), a.cols(), p);
    // Row s of the stacked view is frontal slice s, so C = B * A row-wise.
    ConstStackedSlices src(a.data().data(), p, sliceSize);
    StackedSlices dst(c.data().data(), p, sliceSize);
    dst.noalias() = b * src;
    return c;
}

SliceSpectrum toTransformDomain(const Tensor3& a, const Transform& t)
{
    requireDepth(a, t, "toTransformDomain");
    const Tensor3 tilde = mode3Product(a, t.matrix());
    SliceSpectrum s{a.rows(), a.cols(), a.depth(), {}};
    s.slices.reserve(static_cast<std::size_t>(a.depth()));
    for (Index k = 0; k < a.depth(); ++k) {
        s.slices.push_back(tilde.slice(k));
    }
    return s;
}

Tensor3 fromTransformDomain(const SliceSpectrum& s, const Transform& t)
{
    if (s.p != t.size() || static_cast<Index>(s.slices.size()) != s.p) {
        throw DimensionError("fromTransformDomain: slice count does not match the transform");
    }
    Tensor3 stacked(s.m, s.n, s.p);
    for (Index k = 0; k < s.p; ++k) {
        stacked.setSlice(k, s.slices[static_cast<std::size_t>(k)]);
    }
    return mode3Product(stacked, t.inverse());
}

Matrix matOf(const Tensor3& a, const Transform& t)
{
    const auto s = toTransformDomain(a, t);
    Matrix blocks = Matrix::Zero(s.m * s.p, s.n * s.p);
    for (Index k = 0; k < s.p; ++k) {
        blocks.block(k * s.m, k * s.n, s.m, s.n) = s.slices[static_cast<std::size_t>(k)];
    }
    return blocks;
}

Tensor3 matInvOf(const Matrix& blocks, Index m, Index n, const Transform& t)
{
    if (m <= 0 || n <= 0 || blocks.rows() % m != 0 || blocks.cols() % n != 0) {
        throw DimensionError("matInvOf: a " + std::to_string(blocks.rows()) + "x" +
                             std::to_string(blocks.cols()) + " matrix is not made of " +
                             std::to_string(m) + "x" + std::to_string(n) + " blocks");
    }
    const Index p = blocks.rows() / m;
    if (blocks.cols() / n != p || p != t.size()) {
        throw DimensionError("matInvOf: block count does not match the transform size");
    }
    SliceSpectrum s{m, n, p, {}};
    s.slices.reserve(static_cast<std::size_t>(p));
    for (Index k = 0; k < p; ++k) {
        s.slices.emplace_back(blocks.block(k * m, k * n, m, n));
    }
    return fromTransformDomain(s, t);
}

Tensor3 mProduct(const Tensor3& a, const Tensor3& b, const Transform& t)
{
    if (a.cols() != b.rows()) {
        throw DimensionError("mProduct: inner dimensions differ (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + ")");
    }
    if (a.depth() != b.depth()) {
        throw DimensionError("mProduct: slice counts differ");
    }
    requireDepth(a, t, "mProduct");
    const auto sa = toTransformDomain(a, t);
    const auto sb = toTransformDomain(b, t);
    SliceSpectrum sc{a.rows(), b.cols(), a.depth(), std::vector<Matrix>(sa.slices.size())};
    parallel::forEachSlice(sc.p, cubicWork(a.rows(), a.cols(), b.cols()), [&](std::ptrdiff_t k) {
        sc.slices[k].noalias() = sa.slices[k] * sb.slices[k];
    });
    return fromTransformDomain(sc, t);
}

Tensor3 mPower(const Tensor3& a, Index s, const Transform& t)
{
    requireSquare(a, "mPower");
    if (s < 0) {
        throw DimensionError("mPower: negative exponent");
    }
    auto spec = toTransformDomain(a, t);
    parallel::forEachSlice(spec.p, cubicWork(a.rows(), a.rows(), a.rows()) * s,
                           [&](std::ptrdiff_t k) { spec.slices[k] = matrixPower(spec.slices[k], s); });
    return fromTransformDomain(spec, t);
}

Tensor3 identityTensor(Index m, const Transform& t)
{
    SliceSpectrum s{m, m, t.size(), std::vector<Matrix>(static_cast<std::size_t>(t.size()),
                                                        Matrix::Identity(m, m))};
    return fromTransformDomain(s, t);
}

Tensor3 conjTranspose(const Tensor3& a, const Transform& t)
{
    auto s = toTransformDomain(a, t);
    for (auto& slice : s.slices) {
        slice.adjointInPlace();
    }
    std::swap(s.m, s.n);
    return fromTransformDomain(s, t);
}

double tubalNorm(const Tensor3& a, const Transform& t)
{
    const auto s = toTransformDomain(a, t);
    std::vector<double> norms(s.slices.size());
    parallel::forEachSlice(s.p, cubicWork(s.m, s.n, std::min(s.m, s.n)),
                           [&](std::ptrdiff_t k) { norms[k] = spectralNorm(s.slices[k]); });
    return norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
}

std::vector<Index> multirank(const Tensor3& a, const Transform& t, double rankTol)
{
    const auto s = toTransformDomain(a, t);
    std::vector<Index> ranks(s.slices.size());
    parallel::forEachSlice(s.p, cubicWork(s.m, s.n, std::min(s.m, s.n)), [&](std::ptrdiff_t k) {
        ranks[k] = numericalRank(s.slices[k], rankTol);
    });
    return ranks;
}

IndexProfile indexProfile(const Tensor3& a, const Transform& t, double rankTol)
{
    requireSquare(a, "indexProfile");
    const auto s = toTransformDomain(a, t);
    std::vector<MatrixIndexResult> perSlice(s.slices.size());
    parallel::forEachSlice(s.p, cubicWork(s.m, s.m, s.m) * 4.0, [&](std::ptrdiff_t k) {
        perSlice[k] = matrixIndex(s.slices[k], rankTol);
    });

    IndexProfile profile;
    profile.rankTol = rankTol;
    for (const auto& r : perSlice) {
        profile.ranks.push_back(r.rankSequence.at(1));
        profile.indices.push_back(r.k);
        profile.tubalIndex = std::max(profile.tubalIndex, r.k);
    }
    return profile;
}

double spectralRadius(const Tensor3& a, const Transform& t)
{
    requireSquare(a, "spectralRadius");
    const auto s = toTransformDomain(a, t);
    std::vector<double> radii(s.slices.size());
    parallel::forEachSlice(s.p, cubicWork(s.m, s.m, s.m) * 10.0, [&](std::ptrdiff_t k) {
        radii[k] = matrixSpectralRadius(s.slices[k]);
    });
    return *std::max_element(radii.begin(), radii.end());
}

bool isDiagDominant(const Tensor3& a, const Transform& t)
{
    requireSquare(a, "isDiagDominant");
    const auto s = toTransformDomain(a, t);
    for (const auto& slice : s.slices) {
        for (Index i = 0; i < slice.rows(); ++i) {
            const double diag = std::abs(slice(i, i));
            const double offDiag = slice.row(i).cwiseAbs().sum() - diag;
            if (!(diag > offDiag)) {
                return false;
            }
        }
    }
    return true;
}

bool inRangeOfPower(const Tensor3& a, Index k, const Tensor3& b, const Transform& t, double tol,
                    double rankTol)
{
    requireSquare(a, "inRangeOfPower");
    if (b.rows() != a.rows() || b.depth() != a.depth()) {
        throw DimensionError("inRangeOfPower: B must have shape " + std::to_string(a.rows()) +
                             "xcx" + std::to_string(a.depth()));
    }
    if (k < 0) {
        throw DimensionError("inRangeOfPower: negative power");
    }
    if (k == 0) {
        return true;
    }
    const auto sa = toTransformDomain(a, t);
    const auto sb = toTransformDomain(b, t);

    double scale = 0.0;
    for (const auto& slice : sb.slices) {
        scale = std::max(scale, slice.norm());
    }

    std::vector<double> residuals(sa.slices.size(), 0.0);
    parallel::forEachSlice(sa.p, cubicWork(sa.m, sa.m, sa.m) * (k + 4.0), [&](std::ptrdiff_t i) {
        const Matrix& slice = sa.slices[i];
        const double norm = spectralNorm(slice);
        Index rank = 0;
        Matrix power = Matrix::Zero(slice.rows(), slice.cols());
        if (norm > 0.0) {
            // Same cutoff as matrixIndex: rank of (A/||A||)^k counted above rankTol.
            power = matrixPower(slice / norm, k);
            const auto sv = singularValues(power);
            rank = static_cast<Index>(
                std::count_if(sv.begin(), sv.end(), [rankTol](double v) { return v > rankTol; }));
        }
        residuals[i] = rangeResidual(power, rank, sb.slices[i]);
    });
    return std::all_of(residuals.begin(), residuals.end(),
                       [&](double r) { return r <= tol * scale; });
}

} // namespace tgi
