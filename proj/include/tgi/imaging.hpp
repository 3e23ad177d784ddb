#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "tgi/mproduct.hpp"

// Color images are n x n x 3 tensors: channel c is frontal slice c, row i and
// column j of the image are row i and column j of the slice. Values live in
// [0, 1].

namespace tgi {

struct BlurModel {
    Index n = 0;
    double sigma = 1.0;
    Index bandwidth = 0;
    Index channels = 3;
};

/// Parses "sigma=<double>,b=<int>" (either order) for an n x n image.
BlurModel parsePsf(std::string_view spec, Index n);

/// n x n x channels tensor with identical slices
/// A(i,j,:) = exp(-(i-j)^2 / (2 sigma^2)) / (sigma sqrt(2 pi)) for |i-j| <= b.
Tensor3 buildBlurTensor(const BlurModel& model);

/// X + N with N real Gaussian(0, variance) per entry, drawn in storage order.
Tensor3 addGaussianNoise(const Tensor3& x, double variance, std::uint64_t seed);

/// Real parts clamped to [0, 1]; imaginary parts dropped.
Tensor3 clampToUnit(const Tensor3& x);

/// Tikhonov restoration of B, clamped to [0, 1].
Tensor3 deblur(const Tensor3& a, const Tensor3& b, double lambda, const Transform& t);

/// 10 log10(1 / MSE) over real parts; +inf for identical inputs.
double psnr(const Tensor3& x, const Tensor3& y);

/// `count` values spaced evenly in log10 between lo and hi, inclusive.
std::vector<double> logGrid(double lo, double hi, int count);

struct LambdaScore {
    double lambda = 0.0;
    double psnr = 0.0;
};

/// PSNR of deblur(A, B, lambda) against the clean image for every lambda.
std::vector<LambdaScore> sweepLambda(const Tensor3& a, const Tensor3& b, const Tensor3& clean,
                                     const std::vector<double>& lambdas, const Transform& t);

/// Deterministic n x n x 3 test image (disc, rectangle, smooth gradient).
Tensor3 syntheticImage(Index n);

/// 8-bit RGB(A) or gray PNG as an n x n x 3 tensor; non-square images are rejected.
Tensor3 readPng(const std::filesystem::path& path);

/// Writes an n x n x 3 tensor as 8-bit RGB, clamping to [0, 1].
void writePng(const std::filesystem::path& path, const Tensor3& image);

} // namespace tgi
