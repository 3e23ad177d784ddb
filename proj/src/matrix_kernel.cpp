#include "tgi/matrix_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace tgi {

namespace {

void requireSquare(const Matrix& a, const char* op)
{
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(op) + ": matrix must be square, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

void requireFinite(const Matrix& a, const char* op)
{
    if (!a.allFinite()) {
        throw NumericalError(std::string(op) + ": non-finite input");
    }
}

template <typename Svd>
void checkSvd(const Svd& svd, const char* op)
{
    if (svd.info() != Eigen::Success) {
        throw NumericalError(std::string(op) + ": SVD did not converge");
    }
}

Index countAbove(const Eigen::VectorXd& sv, double threshold)
{
    Index r = 0;
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > threshold) {
            ++r;
        }
    }
    return r;
}

// Pseudo-inverse from a thin SVD, keeping the leading `rank` triplets.
Matrix pinvFromSvd(const Eigen::BDCSVD<Matrix>& svd, Index rank, Index rows, Index cols)
{
    Matrix out = Matrix::Zero(cols, rows);
    if (rank == 0) {
        return out;
    }
    const auto& u = svd.matrixU();
    const auto& v = svd.matrixV();
    const Eigen::VectorXd inv = svd.singularValues().head(rank).cwiseInverse();
    out.noalias() = v.leftCols(rank) * inv.asDiagonal() * u.leftCols(rank).adjoint();
    return out;
}

// A^D A^l (A^l)^+ on the normalized matrix; rescaling is left to the caller.
Matrix coreEPNormalized(const Matrix& unit, const MatrixIndexResult& index, const Matrix& drazin)
{
    const Index l = std::max<Index>(index.k, 1);
    const Matrix power = matrixPower(unit, l);
    return drazin * power * pinvOfRank(power, index.stableRank());
}

Matrix drazinNormalized(const Matrix& unit, const MatrixIndexResult& index)
{
    const Index k = index.k;
    const Index r = index.stableRank();
    if (r == 0) {
        return Matrix::Zero(unit.rows(), unit.cols());
    }
    const Matrix ak = matrixPower(unit, k);
    const Matrix a2k1 = matrixPower(unit, 2 * k + 1);
    return ak * pinvOfRank(a2k1, r) * ak;
}

} // namespace

std::vector<double> singularValues(const Matrix& a)
{
    if (a.size() == 0) {
        return {};
    }
    requireFinite(a, "singularValues");
    Eigen::BDCSVD<Matrix> svd(a);
    checkSvd(svd, "singularValues");
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

double spectralNorm(const Matrix& a)
{
    const auto sv = singularValues(a);
    return sv.empty() ? 0.0 : sv.front();
}

Index numericalRank(const Matrix& a, double rankTol)
{
    const auto sv = singularValues(a);
    if (sv.empty() || sv.front() == 0.0) {
        return 0;
    }
    const double threshold = rankTol * sv.front();
    return static_cast<Index>(std::count_if(sv.begin(), sv.end(),
                                            [threshold](double s) { return s > threshold; }));
}

Matrix pinv(const Matrix& a, double rankTol)
{
    if (a.size() == 0) {
        return Matrix::Zero(a.cols(), a.rows());
    }
    requireFinite(a, "pinv");
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    checkSvd(svd, "pinv");
    const auto& sv = svd.singularValues();
    const Index rank = sv.size() == 0 || sv[0] == 0.0 ? 0 : countAbove(sv, rankTol * sv[0]);
    return pinvFromSvd(svd, rank, a.rows(), a.cols());
}

Matrix pinvOfRank(const Matrix& a, Index rank)
{
    if (rank < 0 || rank > std::min(a.rows(), a.cols())) {
        throw DimensionError("pinvOfRank: rank out of range");
    }
    if (rank == 0 || a.size() == 0) {
        return Matrix::Zero(a.cols(), a.rows());
    }
    requireFinite(a, "pinvOfRank");
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    checkSvd(svd, "pinvOfRank");
    if (svd.singularValues()[rank - 1] == 0.0) {
        throw NumericalError("pinvOfRank: requested rank exceeds the exact rank");
    }
    return pinvFromSvd(svd, rank, a.rows(), a.cols());
}

Matrix matrixPower(const Matrix& a, Index s)
{
    requireSquare(a, "matrixPower");
    if (s < 0) {
        throw DimensionError("matrixPower: negative exponent");
    }
    Matrix result = Matrix::Identity(a.rows(), a.cols());
    for (Index i = 0; i < s; ++i) {
        result = result * a;
    }
    return result;
}

MatrixIndexResult matrixIndex(const Matrix& a, double rankTol)
{
    requireSquare(a, "matrixIndex");
    requireFinite(a, "matrixIndex");
    const Index n = a.rows();
    MatrixIndexResult result;
    result.rankSequence.push_back(n);
    if (n == 0) {
        result.rankSequence.push_back(0);
        return result;
    }

    const double scale = spectralNorm(a);
    if (scale == 0.0) {
        result.k = 1;
        result.rankSequence.push_back(0);
        result.rankSequence.push_back(0);
        return result;
    }

    // Powers of A/||A|| have norm at most one, so the cutoff rankTol is relative
    // to ||A||^j for A^j and roundoff in near-zero powers does not count as rank.
    const Matrix unit = a / scale;
    Matrix power = Matrix::Identity(n, n);
    for (Index j = 1; j <= n + 1; ++j) {
        power = power * unit;
        const auto sv = singularValues(power);
        const auto r = static_cast<Index>(
            std::count_if(sv.begin(), sv.end(), [rankTol](double s) { return s > rankTol; }));
        result.rankSequence.push_back(r);
        if (r == result.rankSequence[static_cast<std::size_t>(j - 1)]) {
            result.k = j - 1;
            return result;
        }
    }
    throw NumericalError("matrixIndex: rank sequence did not stabilize");
}

Matrix matrixDrazin(const Matrix& a, double rankTol)
{
    return matrixDrazin(a, matrixIndex(a, rankTol));
}

Matrix matrixDrazin(const Matrix& a, const MatrixIndexResult& index)
{
    requireSquare(a, "matrixDrazin");
    const double scale = spectralNorm(a);
    if (scale == 0.0) {
        return Matrix::Zero(a.rows(), a.cols());
    }
    // (cA)^D = A^D / c for c > 0.
    return drazinNormalized(a / scale, index) / scale;
}

Matrix matrixCoreEP(const Matrix& a, Index k, double rankTol)
{
    const auto index = matrixIndex(a, rankTol);
    if (k < index.k) {
        throw NumericalError("matrixCoreEP: k = " + std::to_string(k) +
                             " is below the matrix index " + std::to_string(index.k));
    }
    return matrixCoreEP(a, index);
}

Matrix matrixCoreEP(const Matrix& a, const MatrixIndexResult& index)
{
    requireSquare(a, "matrixCoreEP");
    const double scale = spectralNorm(a);
    if (scale == 0.0) {
        return Matrix::Zero(a.rows(), a.cols());
    }
    const Matrix unit = a / scale;
    const Matrix drazin = drazinNormalized(unit, index);
    // rank(A^l) equals the stable rank for every l >= ind(A), so any l >= k
    // gives the same result; the smallest admissible l is used.
    return coreEPNormalized(unit, index, drazin) / scale;
}

std::vector<Complex> eigvals(const Matrix& a)
{
    requireSquare(a, "eigvals");
    if (a.size() == 0) {
        return {};
    }
    requireFinite(a, "eigvals");
    Eigen::ComplexEigenSolver<Matrix> solver(a, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigvals: eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double matrixSpectralRadius(const Matrix& a)
{
    double rho = 0.0;
    for (const auto& z : eigvals(a)) {
        rho = std::max(rho, std::abs(z));
    }
    return rho;
}

LstsqResult lstsq(const Matrix& a, const Vector& b, double rankTol)
{
    if (a.rows() != b.size()) {
        throw DimensionError("lstsq: right-hand side length does not match row count");
    }
    LstsqResult out;
    out.x = pinv(a, rankTol) * b;
    out.residual = (a * out.x - b).norm();
    return out;
}

double rangeResidual(const Matrix& a, Index rank, const Matrix& b)
{
    if (a.rows() != b.rows()) {
        throw DimensionError("rangeResidual: row counts differ");
    }
    if (rank < 0 || rank > std::min(a.rows(), a.cols())) {
        throw DimensionError("rangeResidual: rank out of range");
    }
    Matrix projected = Matrix::Zero(b.rows(), b.cols());
    if (rank > 0) {
        requireFinite(a, "rangeResidual");
        Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU);
        checkSvd(svd, "rangeResidual");
        const auto basis = svd.matrixU().leftCols(rank);
        projected.noalias() = basis * (basis.adjoint() * b);
    }
    double worst = 0.0;
    for (Index c = 0; c < b.cols(); ++c) {
        worst = std::max(worst, (b.col(c) - projected.col(c)).norm());
    }
    return worst;
}

} // namespace tgi
