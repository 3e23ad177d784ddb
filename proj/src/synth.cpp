#include "tgi/synth.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace tgi::synth {

Matrix randomMatrix(Index rows, Index cols, Rng& rng)
{
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            m(i, j) = rng.complexNormal();
        }
    }
    return m;
}

Tensor3 randomTensor(Index m, Index n, Index p, std::uint64_t seed)
{
    Rng rng(seed);
    Tensor3 t(m, n, p);
    for (auto& v : t.data()) {
        v = rng.complexNormal();
    }
    return t;
}

Matrix randomUnitary(Index n, Rng& rng)
{
    Eigen::HouseholderQR<Matrix> qr(randomMatrix(n, n, rng));
    Matrix q = qr.householderQ();
    // Fix the phases so the distribution does not depend on the QR convention.
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

Matrix randomIndexMatrix(Index n, Index k, Rng& rng)
{
    if (k < 0 || k > n) {
        throw DimensionError("randomIndexMatrix: need 0 <= k <= n");
    }
    const Index c = n - k;
    Matrix core = Matrix::Zero(n, n);
    for (Index i = 0; i < c; ++i) {
        const double modulus = rng.uniform(1.0, 2.0);
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        core(i, i) = std::polar(modulus, phase);
        for (Index j = i + 1; j < c; ++j) {
            core(i, j) = 0.3 * rng.complexNormal() / std::sqrt(static_cast<double>(n));
        }
    }
    for (Index i = c; i + 1 < n; ++i) {
        core(i, i + 1) = 1.0;
    }

    Matrix shear = Matrix::Identity(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            shear(i, j) = 0.25 * rng.complexNormal() / std::sqrt(static_cast<double>(n));
        }
    }
    const Matrix s = randomUnitary(n, rng) * shear;
    return s * core * s.inverse();
}

Tensor3 randomIndexTensor(Index m, Index p, Index k, const Transform& t, std::uint64_t seed)
{
    if (p != t.size()) {
        throw DimensionError("randomIndexTensor: p does not match the transform");
    }
    Rng rng(seed);
    SliceSpectrum s{m, m, p, {}};
    for (Index i = 0; i < p; ++i) {
        const Index ki = i == 0 ? k : rng.integer(0, k);
        s.slices.push_back(randomIndexMatrix(m, ki, rng));
    }
    return fromTransformDomain(s, t);
}

Tensor3 diagDominantTensor(Index n, Index p, const Transform& t, std::uint64_t seed)
{
    if (p != t.size()) {
        throw DimensionError("diagDominantTensor: p does not match the transform");
    }
    Rng rng(seed);
    SliceSpectrum s{n, n, p, {}};
    for (Index i = 0; i < p; ++i) {
        Matrix slice = randomMatrix(n, n, rng);
        for (Index r = 0; r < n; ++r) {
            const double off = slice.row(r).cwiseAbs().sum() - std::abs(slice(r, r));
            slice(r, r) = std::polar(off + rng.uniform(0.5, 1.5), rng.uniform(0.0, 2.0 * std::numbers::pi));
        }
        s.slices.push_back(std::move(slice));
    }
    return fromTransformDomain(s, t);
}

} // namespace tgi::synth
