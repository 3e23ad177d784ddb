#include <gtest/gtest.h>

#include <cmath>

#include "tgi/gallery.hpp"
#include "tgi/solvers.hpp"
#include "tgi/synth.hpp"

using namespace tgi;

namespace {

Tensor3 mp(const Tensor3& a, const Tensor3& b, const Transform& t) { return mProduct(a, b, t); }

// Every transform-domain slice is I - rho P with P the cyclic shift, so the
// Jacobi iteration matrix has spectral radius exactly rho.
Tensor3 shiftFamily(Index n, double rho, const Transform& t)
{
    Matrix shift = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        shift(i, (i + 1) % n) = 1.0;
    }
    SliceSpectrum s{n, n, t.size(), {}};
    for (Index i = 0; i < t.size(); ++i) {
        s.slices.push_back(Matrix::Identity(n, n) - rho * shift);
    }
    return fromTransformDomain(s, t);
}

} // namespace

TEST(DrazinSolve, ConsistentRightHandSide)
{
    const Transform t = dftTransform(3);
    for (Index k : {1, 2, 3}) {
        const Tensor3 a = synth::randomIndexTensor(5, 3, k, t, 20 + k);
        const Index idx = indexProfile(a, t).drazinIndex();
        const Tensor3 b = mp(mPower(a, idx, t), synth::randomTensor(5, 2, 3, 30 + k), t);
        const Tensor3 x = solveDrazin(a, b, t);
        EXPECT_LE(relativeError(mp(a, x, t), b), 1e-8) << "k=" << k;
        EXPECT_LE(relativeError(x, mp(drazinInverse(a, t).inverse, b, t)), 1e-12);
    }
}

TEST(DrazinSolve, InconsistentRightHandSideThrows)
{
    const Transform t = dctTransform(3);
    const Tensor3 a = synth::randomIndexTensor(5, 3, 2, t, 41);
    const Tensor3 b = synth::randomTensor(5, 1, 3, 42);
    EXPECT_THROW(solveDrazin(a, b, t), InconsistentSystemError);
    EXPECT_THROW(generalSolutionCoreEP(a, b, Tensor3(5, 1, 3), t), InconsistentSystemError);
    EXPECT_THROW(solveComposite(a, b, InverseKind::Cmp, t), InconsistentSystemError);
}

TEST(DrazinSolve, InvertibleMatchesInverse)
{
    const Transform t = randomInvertibleTransform(4, 3);
    const Tensor3 a = synth::randomIndexTensor(4, 4, 0, t, 43);
    const Tensor3 b = synth::randomTensor(4, 3, 4, 44);
    const Tensor3 x = solveDrazin(a, b, t);
    EXPECT_LE(relativeError(mp(a, x, t), b), 1e-10);
}

TEST(GeneralSolution, DrazinFamilySolvesPowerSystem)
{
    const Transform t = dftTransform(4);
    const Tensor3 a = synth::randomIndexTensor(5, 4, 2, t, 45);
    const Index k = indexProfile(a, t).drazinIndex();
    const Tensor3 b = synth::randomTensor(5, 2, 4, 46);
    const Tensor3 ak = mPower(a, k, t);
    const Tensor3 ak1 = mPower(a, k + 1, t);
    for (std::uint64_t seed : {47, 48, 49}) {
        const Tensor3 z = synth::randomTensor(5, 2, 4, seed);
        const Tensor3 x = generalSolutionDrazin(a, b, z, t);
        EXPECT_LE(relativeError(mp(ak1, x, t), mp(ak, b, t)), 1e-8);
    }
    EXPECT_LE(relativeError(generalSolutionDrazin(a, b, Tensor3(5, 2, 4), t),
                            mp(drazinInverse(a, t).inverse, b, t)),
              1e-12);
}

TEST(GeneralSolution, CoreEPFamily)
{
    const Transform t = dctTransform(3);
    const Tensor3 a = synth::randomIndexTensor(5, 3, 2, t, 50);
    const Index k = indexProfile(a, t).drazinIndex();
    const Tensor3 b = mp(mPower(a, k, t), synth::randomTensor(5, 2, 3, 51), t);
    const Tensor3 c = coreEPInverse(a, t);
    for (std::uint64_t seed : {52, 53}) {
        const Tensor3 z = synth::randomTensor(5, 2, 3, seed);
        const Tensor3 x = generalSolutionCoreEP(a, b, z, t);
        EXPECT_LE(relativeError(mp(mPower(a, k + 1, t), x, t), mp(mPower(a, k, t), b, t)), 1e-8);
        const Tensor3 d = drazinInverse(a, t).inverse;
        EXPECT_LE(relativeError(x, mp(c, b, t) + z - mp(mp(d, a, t), z, t)), 1e-10);
    }
    // On R(A^k) the core-EP and Drazin inverses agree.
    EXPECT_LE(relativeError(generalSolutionCoreEP(a, b, Tensor3(5, 2, 3), t), solveDrazin(a, b, t)),
              1e-8);
}

TEST(CompositeSolve, ConsistentSystems)
{
    const Transform t = dftTransform(3);
    const Tensor3 a = synth::randomIndexTensor(4, 3, 2, t, 54);
    const Index k = indexProfile(a, t).drazinIndex();
    const Tensor3 b = mp(mPower(a, k, t), synth::randomTensor(4, 1, 3, 55), t);
    for (auto kind : {InverseKind::Dmp, InverseKind::Mpd, InverseKind::Cmp}) {
        const Tensor3 x = solveComposite(a, b, kind, t);
        EXPECT_LE(relativeError(x, mp(compositeInverse(a, kind, t), b, t)), 1e-12);
    }
    // The DMP solution solves the power system on R(A^k).
    const Tensor3 x = solveComposite(a, b, InverseKind::Dmp, t);
    EXPECT_LE(relativeError(mp(mPower(a, k + 1, t), x, t), mp(mPower(a, k, t), b, t)), 1e-8);
}

TEST(Iterative, ParseMethod)
{
    EXPECT_EQ(parseIterativeMethod("jacobi"), IterativeMethod::Jacobi);
    EXPECT_EQ(parseIterativeMethod("gauss-seidel"), IterativeMethod::GaussSeidel);
    EXPECT_EQ(toString(IterativeMethod::GaussSeidel), "gauss-seidel");
    EXPECT_THROW(parseIterativeMethod("sor"), DimensionError);
}

TEST(Iterative, DiagDominantConvergesAndGaussSeidelIsFaster)
{
    for (int i = 0; i < 6; ++i) {
        const Transform t = i % 2 ? dctTransform(4) : dftTransform(4);
        const Tensor3 a = synth::diagDominantTensor(8, 4, t, 60 + i);
        ASSERT_TRUE(isDiagDominant(a, t));
        const Tensor3 b = synth::randomTensor(8, 2, 4, 70 + i);
        SolverConfig cfg;
        cfg.epsilon = 1e-12;
        const auto jac = jacobiSolve(a, b, cfg, t);
        const auto gs = gaussSeidelSolve(a, b, cfg, t);
        ASSERT_TRUE(jac.report.allConverged());
        ASSERT_TRUE(gs.report.allConverged());
        EXPECT_LT(jac.report.spectralRadiusOfT, 1.0);
        EXPECT_LE(gs.report.spectralRadiusOfT, jac.report.spectralRadiusOfT + 1e-12);
        const double scale = tubalNorm(b, t);
        EXPECT_LT(jac.report.finalResidual, 1e-9 * scale);
        EXPECT_LT(gs.report.finalResidual, 1e-9 * scale);
        for (std::size_t s = 0; s < jac.report.perSliceIters.size(); ++s) {
            EXPECT_LE(gs.report.perSliceIters[s], jac.report.perSliceIters[s]);
        }
        const Tensor3 exact = mp(mpInverse(a, t), b, t);
        EXPECT_LE(relativeError(jac.x, exact), 1e-9);
        EXPECT_LE(relativeError(gs.x, exact), 1e-9);
    }
}

TEST(Iterative, SpectralRadiusFamily)
{
    const Transform t = dftTransform(3);
    const Tensor3 b = synth::randomTensor(6, 1, 3, 80);
    SolverConfig cfg;
    cfg.maxIter = 5000;
    for (double rho : {0.5, 0.9}) {
        const Tensor3 a = shiftFamily(6, rho, t);
        EXPECT_NEAR(iterationSpectralRadius(a, IterativeMethod::Jacobi, t), rho, 1e-10);
        const auto r = jacobiSolve(a, b, cfg, t);
        EXPECT_TRUE(r.report.allConverged()) << rho;
        EXPECT_LT(r.report.finalResidual, 1e-8 * tubalNorm(b, t));
    }
    const Tensor3 a = shiftFamily(6, 1.1, t);
    EXPECT_NEAR(iterationSpectralRadius(a, IterativeMethod::Jacobi, t), 1.1, 1e-10);
    const auto r = jacobiSolve(a, b, cfg, t);
    EXPECT_FALSE(r.report.allConverged());
    EXPECT_TRUE(std::isinf(r.report.finalResidual) || r.report.finalResidual > 1.0);
}

TEST(Iterative, SlowerRateNeedsMoreIterations)
{
    const Transform t = dctTransform(2);
    const Tensor3 b = synth::randomTensor(5, 1, 2, 81);
    SolverConfig cfg;
    const auto fast = jacobiSolve(shiftFamily(5, 0.5, t), b, cfg, t);
    const auto slow = jacobiSolve(shiftFamily(5, 0.9, t), b, cfg, t);
    EXPECT_LT(fast.report.perSliceIters[0], slow.report.perSliceIters[0]);
}

TEST(Iterative, DiagonalSliceStopsAtSecondIterate)
{
    // X^1 is already exact; the distance rule needs X^2 - X^1 to confirm it.
    const Transform t = Transform(Matrix::Identity(2, 2));
    Tensor3 a(3, 3, 2);
    for (Index i = 0; i < 3; ++i) {
        a(i, i, 0) = 2.0 + i;
        a(i, i, 1) = 1.0;
        if (i + 1 < 3) {
            a(i, i + 1, 1) = 0.2;
        }
    }
    const Tensor3 b = synth::randomTensor(3, 1, 2, 82);
    for (auto method : {IterativeMethod::Jacobi, IterativeMethod::GaussSeidel}) {
        SolverConfig cfg;
        cfg.method = method;
        const auto r = iterativeSolve(a, b, cfg, t);
        EXPECT_EQ(r.report.perSliceIters[0], 2);
        EXPECT_GT(r.report.perSliceIters[1], 2);
        EXPECT_TRUE(r.report.allConverged());
    }
}

TEST(Iterative, ZeroDiagonalAndShapes)
{
    const Transform t = dftTransform(2);
    Tensor3 a = identityTensor(3, t);
    SliceSpectrum s = toTransformDomain(a, t);
    s.slices[1](1, 1) = 0.0;
    s.slices[1](1, 0) = 1.0;
    const Tensor3 bad = fromTransformDomain(s, t);
    EXPECT_THROW(jacobiSolve(bad, Tensor3(3, 1, 2), SolverConfig{}, t), NumericalError);
    EXPECT_THROW(jacobiSolve(a, Tensor3(4, 1, 2), SolverConfig{}, t), DimensionError);
}

TEST(Iterative, InitialGuessAtSolutionStopsImmediately)
{
    const Transform t = dctTransform(3);
    const Tensor3 a = synth::diagDominantTensor(5, 3, t, 83);
    const Tensor3 b = synth::randomTensor(5, 1, 3, 84);
    const Tensor3 exact = mp(mpInverse(a, t), b, t);
    SolverConfig cfg;
    cfg.epsilon = 1e-8;
    const auto r = gaussSeidelSolve(a, b, exact, cfg, t);
    for (Index it : r.report.perSliceIters) {
        EXPECT_EQ(it, 1);
    }
}

TEST(Neumann, MatchesInverseOfIMinusA)
{
    const Transform t = dftTransform(3);
    const Tensor3 a = Complex(0.4) * shiftFamily(4, -1.0, t) - Complex(0.4) * identityTensor(4, t);
    ASSERT_LT(spectralRadius(a, t), 1.0);
    const Tensor3 sum = neumannSum(a, t, 200);
    const Tensor3 expected = mpInverse(identityTensor(4, t) - a, t);
    EXPECT_LE(relativeError(sum, expected), 1e-12);
    EXPECT_THROW(neumannSum(Complex(3.0) * identityTensor(4, t), t, 10), NumericalError);
}

TEST(Tikhonov, SmallLambdaRecoversConsistentSolution)
{
    const Transform t = dctTransform(3);
    const Tensor3 a = synth::randomTensor(6, 4, 3, 90);
    const Tensor3 x = synth::randomTensor(4, 2, 3, 91);
    const Tensor3 b = mp(a, x, t);
    EXPECT_LE(relativeError(tikhonovSolve(a, b, 1e-12, t), x), 1e-8);
    EXPECT_THROW(tikhonovSolve(a, b, 0.0, t), DimensionError);
}

TEST(Tikhonov, GradientVanishes)
{
    const Transform t = randomInvertibleTransform(3, 92);
    const Tensor3 a = synth::randomTensor(5, 5, 3, 93);
    const Tensor3 b = synth::randomTensor(5, 2, 3, 94);
    const double lambda = 0.3;
    const Tensor3 x = tikhonovSolve(a, b, lambda, t);
    const Tensor3 ah = conjTranspose(a, t);
    const Tensor3 grad = mp(ah, mp(a, x, t) - b, t) + Complex(lambda) * x;
    EXPECT_LT(tubalNorm(grad, t), 1e-10 * tubalNorm(b, t) * (1 + tubalNorm(a, t)));
}

TEST(Tikhonov, LargeLambdaShrinksToScaledAdjoint)
{
    const Transform t = dftTransform(2);
    const Tensor3 a = synth::randomTensor(4, 4, 2, 95);
    const Tensor3 b = synth::randomTensor(4, 1, 2, 96);
    const double lambda = 1e8;
    const Tensor3 x = tikhonovSolve(a, b, lambda, t);
    const Tensor3 approx = Complex(1.0 / lambda) * mp(conjTranspose(a, t), b, t);
    EXPECT_LE(relativeError(x, approx), 1e-6);
    EXPECT_LT(tubalNorm(x, t), 1e-6);
}
