#include "tgi/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

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

void requireRhs(const Tensor3& a, const Tensor3& b, const char* op)
{
    if (b.rows() != a.rows() || b.depth() != a.depth()) {
        throw DimensionError(std::string(op) + ": B must be " + std::to_string(a.rows()) +
                             "xcx" + std::to_string(a.depth()) + ", got " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + "x" +
                             std::to_string(b.depth()));
    }
}

double sliceWork(Index n) { return static_cast<double>(n * n * n) * 20.0; }

void requireConsistent(const Tensor3& a, const Tensor3& b, const Transform& t, double rankTol,
                       const char* what)
{
    const Index k = indexProfile(a, t, rankTol).drazinIndex();
    if (!inRangeOfPower(a, k, b, t, 1e-8, rankTol)) {
        throw InconsistentSystemError(std::string("inconsistent system for ") + what +
                                      " solution: B is not in the range of A^" +
                                      std::to_string(k));
    }
}

void requireNonzeroDiagonal(const Matrix& slice, Index sliceIndex)
{
    for (Index i = 0; i < slice.rows(); ++i) {
        if (slice(i, i) == Complex(0.0)) {
            throw NumericalError("splitting undefined: slice " + std::to_string(sliceIndex) +
                                 " has a zero diagonal entry at row " + std::to_string(i));
        }
    }
}

// The iteration matrix x -> T x + c of the splitting.
Matrix iterationMatrix(const Matrix& a, IterativeMethod method)
{
    if (method == IterativeMethod::Jacobi) {
        const Eigen::VectorXcd d = a.diagonal();
        Matrix f = a;
        f.diagonal().setZero();
        return -(d.cwiseInverse().asDiagonal() * f);
    }
    const Matrix upper = a.triangularView<Eigen::StrictlyUpper>();
    return -a.triangularView<Eigen::Lower>().solve(upper);
}

struct SliceOutcome {
    Index iters = 0;
    bool converged = false;
};

SliceOutcome iterateSlice(const Matrix& a, const Matrix& b, Matrix& x, const SolverConfig& cfg)
{
    SliceOutcome out;
    Matrix next(x.rows(), x.cols());
    if (cfg.method == IterativeMethod::Jacobi) {
        const Eigen::VectorXcd dinv = a.diagonal().cwiseInverse();
        Matrix f = a;
        f.diagonal().setZero();
        for (Index s = 1; s <= cfg.maxIter; ++s) {
            next.noalias() = dinv.asDiagonal() * (b - f * x);
            const double step = (next - x).norm();
            x.swap(next);
            out.iters = s;
            if (!std::isfinite(step)) {
                return out;
            }
            if (step <= cfg.epsilon) {
                out.converged = true;
                return out;
            }
        }
        return out;
    }

    const Matrix upper = a.triangularView<Eigen::StrictlyUpper>();
    const auto lower = a.triangularView<Eigen::Lower>();
    for (Index s = 1; s <= cfg.maxIter; ++s) {
        next = lower.solve(b - upper * x);
        const double step = (next - x).norm();
        x.swap(next);
        out.iters = s;
        if (!std::isfinite(step)) {
            return out;
        }
        if (step <= cfg.epsilon) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

} // namespace

IterativeMethod parseIterativeMethod(std::string_view name)
{
    if (name == "jacobi") {
        return IterativeMethod::Jacobi;
    }
    if (name == "gauss-seidel") {
        return IterativeMethod::GaussSeidel;
    }
    throw DimensionError("unknown iterative method '" + std::string(name) + "'");
}

std::string toString(IterativeMethod method)
{
    return method == IterativeMethod::Jacobi ? "jacobi" : "gauss-seidel";
}

bool SolverReport::allConverged() const
{
    return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

Tensor3 solveDrazin(const Tensor3& a, const Tensor3& b, const Transform& t, double rankTol)
{
    requireSquare(a, "solveDrazin");
    requireRhs(a, b, "solveDrazin");
    requireConsistent(a, b, t, rankTol, "Drazin");
    return mProduct(drazinInverse(a, t, rankTol).inverse, b, t);
}

Tensor3 generalSolutionDrazin(const Tensor3& a, const Tensor3& b, const Tensor3& z,
                              const Transform& t, double rankTol)
{
    requireSquare(a, "generalSolutionDrazin");
    requireRhs(a, b, "generalSolutionDrazin");
    if (!z.sameShape(b)) {
        throw DimensionError("generalSolutionDrazin: Z must have the shape of B");
    }
    const auto sa = toTransformDomain(a, t);
    const auto sb = toTransformDomain(b, t);
    const auto sz = toTransformDomain(z, t);
    SliceSpectrum out{sb.m, sb.n, sb.p, std::vector<Matrix>(sb.slices.size())};
    parallel::forEachSlice(sa.p, sliceWork(sa.m), [&](std::ptrdiff_t k) {
        const Matrix d = matrixDrazin(sa.slices[k], rankTol);
        out.slices[k] = d * sb.slices[k] + sz.slices[k] - d * (sa.slices[k] * sz.slices[k]);
    });
    return fromTransformDomain(out, t);
}

Tensor3 generalSolutionCoreEP(const Tensor3& a, const Tensor3& b, const Tensor3& z,
                              const Transform& t, double rankTol)
{
    requireSquare(a, "generalSolutionCoreEP");
    requireRhs(a, b, "generalSolutionCoreEP");
    if (!z.sameShape(b)) {
        throw DimensionError("generalSolutionCoreEP: Z must have the shape of B");
    }
    // A * A^{core-EP} is the orthogonal projector onto R_M(A^k).
    requireConsistent(a, b, t, rankTol, "core-EP");
    const auto sa = toTransformDomain(a, t);
    const auto sb = toTransformDomain(b, t);
    const auto sz = toTransformDomain(z, t);
    SliceSpectrum out{sb.m, sb.n, sb.p, std::vector<Matrix>(sb.slices.size())};
    parallel::forEachSlice(sa.p, sliceWork(sa.m), [&](std::ptrdiff_t k) {
        const auto index = matrixIndex(sa.slices[k], rankTol);
        const Matrix d = matrixDrazin(sa.slices[k], index);
        const Matrix c = matrixCoreEP(sa.slices[k], index);
        out.slices[k] = c * sb.slices[k] + sz.slices[k] - d * (sa.slices[k] * sz.slices[k]);
    });
    return fromTransformDomain(out, t);
}

Tensor3 solveComposite(const Tensor3& a, const Tensor3& b, InverseKind kind, const Transform& t,
                       double rankTol)
{
    requireSquare(a, "solveComposite");
    requireRhs(a, b, "solveComposite");
    const Tensor3 inverse = compositeInverse(a, kind, t, rankTol);
    requireConsistent(a, b, t, rankTol, toString(kind).c_str());
    return mProduct(inverse, b, t);
}

IterativeResult iterativeSolve(const Tensor3& a, const Tensor3& b, const Tensor3& x0,
                               const SolverConfig& cfg, const Transform& t)
{
    requireSquare(a, "iterativeSolve");
    requireRhs(a, b, "iterativeSolve");
    if (!x0.sameShape(b)) {
        throw DimensionError("iterativeSolve: X0 must have the shape of B");
    }
    if (!(cfg.epsilon > 0.0) || cfg.maxIter < 1) {
        throw DimensionError("iterativeSolve: epsilon must be positive and maxIter at least 1");
    }
    const auto sa = toTransformDomain(a, t);
    const auto sb = toTransformDomain(b, t);
    auto sx = toTransformDomain(x0, t);
    for (Index k = 0; k < sa.p; ++k) {
        requireNonzeroDiagonal(sa.slices[static_cast<std::size_t>(k)], k);
    }

    std::vector<SliceOutcome> outcomes(sa.slices.size());
    std::vector<double> radii(sa.slices.size());
    const double work = static_cast<double>(sa.m * sa.m * sb.n) * static_cast<double>(cfg.maxIter);
    parallel::forEachSlice(sa.p, work, [&](std::ptrdiff_t k) {
        radii[k] = matrixSpectralRadius(iterationMatrix(sa.slices[k], cfg.method));
        outcomes[k] = iterateSlice(sa.slices[k], sb.slices[k], sx.slices[k], cfg);
    });

    IterativeResult result{fromTransformDomain(sx, t), {}};
    for (const auto& o : outcomes) {
        result.report.perSliceIters.push_back(o.iters);
        result.report.converged.push_back(o.converged);
    }
    result.report.spectralRadiusOfT = *std::max_element(radii.begin(), radii.end());
    result.report.finalResidual = std::isfinite(result.x.maxAbs())
                                      ? tubalNorm(mProduct(a, result.x, t) - b, t)
                                      : std::numeric_limits<double>::infinity();
    return result;
}

IterativeResult iterativeSolve(const Tensor3& a, const Tensor3& b, const SolverConfig& cfg,
                               const Transform& t)
{
    return iterativeSolve(a, b, Tensor3(a.cols(), b.cols(), b.depth()), cfg, t);
}

IterativeResult jacobiSolve(const Tensor3& a, const Tensor3& b, const Tensor3& x0,
                            SolverConfig cfg, const Transform& t)
{
    cfg.method = IterativeMethod::Jacobi;
    return iterativeSolve(a, b, x0, cfg, t);
}

IterativeResult jacobiSolve(const Tensor3& a, const Tensor3& b, SolverConfig cfg,
                            const Transform& t)
{
    cfg.method = IterativeMethod::Jacobi;
    return iterativeSolve(a, b, cfg, t);
}

IterativeResult gaussSeidelSolve(const Tensor3& a, const Tensor3& b, const Tensor3& x0,
                                 SolverConfig cfg, const Transform& t)
{
    cfg.method = IterativeMethod::GaussSeidel;
    return iterativeSolve(a, b, x0, cfg, t);
}

IterativeResult gaussSeidelSolve(const Tensor3& a, const Tensor3& b, SolverConfig cfg,
                                 const Transform& t)
{
    cfg.method = IterativeMethod::GaussSeidel;
    return iterativeSolve(a, b, cfg, t);
}

double iterationSpectralRadius(const Tensor3& a, IterativeMethod method, const Transform& t)
{
    requireSquare(a, "iterationSpectralRadius");
    const auto s = toTransformDomain(a, t);
    std::vector<double> radii(s.slices.size());
    for (Index k = 0; k < s.p; ++k) {
        requireNonzeroDiagonal(s.slices[static_cast<std::size_t>(k)], k);
    }
    parallel::forEachSlice(s.p, sliceWork(s.m), [&](std::ptrdiff_t k) {
        radii[k] = matrixSpectralRadius(iterationMatrix(s.slices[k], method));
    });
    return *std::max_element(radii.begin(), radii.end());
}

Tensor3 neumannSum(const Tensor3& a, const Transform& t, Index terms)
{
    requireSquare(a, "neumannSum");
    if (terms < 0) {
        throw DimensionError("neumannSum: negative term count");
    }
    const double rho = spectralRadius(a, t);
    if (!(rho < 1.0)) {
        throw NumericalError("neumannSum: spectral radius " + std::to_string(rho) +
                             " is not below 1, the series diverges");
    }
    auto s = toTransformDomain(a, t);
    parallel::forEachSlice(s.p, static_cast<double>(s.m * s.m * s.m) * static_cast<double>(terms), [&](std::ptrdiff_t k) {
        const Matrix& slice = s.slices[k];
        Matrix power = Matrix::Identity(s.m, s.m);
        Matrix sum = power;
        for (Index j = 1; j <= terms; ++j) {
            power = power * slice;
            sum += power;
        }
        s.slices[k] = std::move(sum);
    });
    return fromTransformDomain(s, t);
}

Tensor3 tikhonovSolve(const Tensor3& a, const Tensor3& b, double lambda, const Transform& t)
{
    if (!(lambda > 0.0)) {
        throw DimensionError("tikhonovSolve: lambda must be positive");
    }
    requireRhs(a, b, "tikhonovSolve");
    const auto sa = toTransformDomain(a, t);
    const auto sb = toTransformDomain(b, t);
    SliceSpectrum out{sa.n, sb.n, sa.p, std::vector<Matrix>(sa.slices.size())};
    parallel::forEachSlice(sa.p, sliceWork(std::max(sa.m, sa.n)), [&](std::ptrdiff_t k) {
        // x = V diag(s / (s^2 + lambda)) U^H b solves the regularized normal
        // equations without forming A^H A.
        Eigen::BDCSVD<Matrix> svd(sa.slices[k], Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (svd.info() != Eigen::Success) {
            throw NumericalError("tikhonovSolve: SVD did not converge");
        }
        const Eigen::VectorXd sv = svd.singularValues();
        const Eigen::VectorXd filter = sv.array() / (sv.array().square() + lambda);
        out.slices[k].noalias() =
            svd.matrixV() * (filter.asDiagonal() * (svd.matrixU().adjoint() * sb.slices[k]));
    });
    return fromTransformDomain(out, t);
}

} // namespace tgi
