#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tgi/geninv.hpp"

namespace tgi {

enum class IterativeMethod { Jacobi, GaussSeidel };

/// Accepts jacobi and gauss-seidel.
IterativeMethod parseIterativeMethod(std::string_view name);
std::string toString(IterativeMethod method);

struct SolverConfig {
    double epsilon = 1e-10; ///< stop when ||X^s - X^{s-1}||_F <= epsilon on a slice
    Index maxIter = 1000;
    IterativeMethod method = IterativeMethod::Jacobi;
};

struct SolverReport {
    std::vector<Index> perSliceIters;
    std::vector<bool> converged;
    double finalResidual = 0.0;     ///< tubalNorm(A * X - B)
    double spectralRadiusOfT = 0.0; ///< max over slices of rho of the iteration matrix

    bool allConverged() const;
};

struct IterativeResult {
    Tensor3 x;
    SolverReport report;
};

/// X = A^D * B. Requires B in R_M(A^k) with k the tubal index (at least 1);
/// otherwise throws InconsistentSystemError.
Tensor3 solveDrazin(const Tensor3& a, const Tensor3& b, const Transform& t,
                    double rankTol = kDefaultRankTol);

/// A^D * B + (I - A^D * A) * Z, a solution of A^{k+1} X = A^k B for any Z.
Tensor3 generalSolutionDrazin(const Tensor3& a, const Tensor3& b, const Tensor3& z,
                              const Transform& t, double rankTol = kDefaultRankTol);

/// A^{core-EP} * B + (I - A^D * A) * Z. Requires B in R_M(A * A^{core-EP}),
/// which is R_M(A^k); throws InconsistentSystemError otherwise.
Tensor3 generalSolutionCoreEP(const Tensor3& a, const Tensor3& b, const Tensor3& z,
                              const Transform& t, double rankTol = kDefaultRankTol);

/// Composite inverse of the given kind (dmp, mpd, cmp) applied to B.
/// Requires B in R_M(A^k); throws InconsistentSystemError otherwise.
Tensor3 solveComposite(const Tensor3& a, const Tensor3& b, InverseKind kind, const Transform& t,
                       double rankTol = kDefaultRankTol);

/// Splitting iteration on every transform-domain slice, with the right-hand side
/// transformed as well (b~ = B x_3 M), so the fixed point solves A * X = B.
/// Slices whose iterates blow up or stall at maxIter are flagged unconverged.
/// Throws NumericalError for a zero diagonal entry.
IterativeResult iterativeSolve(const Tensor3& a, const Tensor3& b, const Tensor3& x0,
                               const SolverConfig& cfg, const Transform& t);
IterativeResult iterativeSolve(const Tensor3& a, const Tensor3& b, const SolverConfig& cfg,
                               const Transform& t);

/// iterativeSolve with the method forced to Jacobi / Gauss-Seidel. X0 defaults to zero.
IterativeResult jacobiSolve(const Tensor3& a, const Tensor3& b, const Tensor3& x0,
                            SolverConfig cfg, const Transform& t);
IterativeResult jacobiSolve(const Tensor3& a, const Tensor3& b, SolverConfig cfg,
                            const Transform& t);
IterativeResult gaussSeidelSolve(const Tensor3& a, const Tensor3& b, const Tensor3& x0,
                                 SolverConfig cfg, const Transform& t);
IterativeResult gaussSeidelSolve(const Tensor3& a, const Tensor3& b, SolverConfig cfg,
                                 const Transform& t);

/// Largest spectral radius of -D^{-1}F (Jacobi) or -L^{-1}U (Gauss-Seidel)
/// over the transform-domain slices.
double iterationSpectralRadius(const Tensor3& a, IterativeMethod method, const Transform& t);

/// sum_{s=0}^{terms} A^s. Throws NumericalError unless rho(A) < 1.
Tensor3 neumannSum(const Tensor3& a, const Transform& t, Index terms);

/// Minimizer of ||A~_i x - b~_i||^2 + lambda ||x||^2 on every slice, i.e. the
/// solution of (A^H A + lambda I) X = A^H B. A is m x n x p, B is m x c x p.
Tensor3 tikhonovSolve(const Tensor3& a, const Tensor3& b, double lambda, const Transform& t);

} // namespace tgi
