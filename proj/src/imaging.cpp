#include "tgi/imaging.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include <png.h>

#include "tgi/rng.hpp"
#include "tgi/solvers.hpp"

namespace tgi {

namespace {

template <typename T>
T parseNumber(std::string_view text, std::string_view spec)
{
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw DimensionError("invalid PSF '" + std::string(spec) + "'");
    }
    return value;
}

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::uint8_t toByte(double v)
{
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

} // namespace

BlurModel parsePsf(std::string_view spec, Index n)
{
    BlurModel model;
    model.n = n;
    bool haveSigma = false;
    bool haveB = false;
    std::string_view rest = spec;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw DimensionError("invalid PSF '" + std::string(spec) + "'");
        }
        const auto key = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        if (key == "sigma") {
            model.sigma = parseNumber<double>(value, spec);
            haveSigma = true;
        } else if (key == "b") {
            model.bandwidth = parseNumber<Index>(value, spec);
            haveB = true;
        } else {
            throw DimensionError("unknown PSF key '" + std::string(key) + "'");
        }
    }
    if (!haveSigma || !haveB || !(model.sigma > 0.0) || model.bandwidth < 0) {
        throw DimensionError("PSF needs sigma > 0 and b >= 0, got '" + std::string(spec) + "'");
    }
    return model;
}

Tensor3 buildBlurTensor(const BlurModel& model)
{
    if (model.n < 1 || model.channels < 1 || !(model.sigma > 0.0) || model.bandwidth < 0) {
        throw DimensionError("buildBlurTensor: need n >= 1, sigma > 0, b >= 0");
    }
    const double scale = 1.0 / (model.sigma * std::sqrt(2.0 * std::numbers::pi));
    Matrix slice = Matrix::Zero(model.n, model.n);
    for (Index i = 0; i < model.n; ++i) {
        for (Index j = 0; j < model.n; ++j) {
            const Index d = i - j;
            if (std::abs(d) <= model.bandwidth) {
                const double dd = static_cast<double>(d * d);
                slice(i, j) = scale * std::exp(-dd / (2.0 * model.sigma * model.sigma));
            }
        }
    }
    Tensor3 a(model.n, model.n, model.channels);
    for (Index k = 0; k < model.channels; ++k) {
        a.setSlice(k, slice);
    }
    return a;
}

Tensor3 addGaussianNoise(const Tensor3& x, double variance, std::uint64_t seed)
{
    if (!(variance >= 0.0)) {
        throw DimensionError("addGaussianNoise: variance must be non-negative");
    }
    Tensor3 out = x;
    if (variance == 0.0) {
        return out;
    }
    Rng rng(seed);
    const double sd = std::sqrt(variance);
    for (auto& v : out.data()) {
        v += sd * rng.normal();
    }
    return out;
}

Tensor3 clampToUnit(const Tensor3& x)
{
    Tensor3 out(x.rows(), x.cols(), x.depth());
    auto dst = out.data();
    auto src = x.data();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = std::clamp(src[i].real(), 0.0, 1.0);
    }
    return out;
}

Tensor3 deblur(const Tensor3& a, const Tensor3& b, double lambda, const Transform& t)
{
    if (!a.isSquare() || !b.isSquare() || b.rows() != a.rows()) {
        throw DimensionError("deblur: blur tensor and image must both be n x n x p");
    }
    return clampToUnit(tikhonovSolve(a, b, lambda, t));
}

double psnr(const Tensor3& x, const Tensor3& y)
{
    if (!x.sameShape(y)) {
        throw DimensionError("psnr: shapes differ");
    }
    double sum = 0.0;
    auto xs = x.data();
    auto ys = y.data();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = xs[i].real() - ys[i].real();
        sum += d * d;
    }
    if (sum == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(static_cast<double>(xs.size()) / sum);
}

std::vector<double> logGrid(double lo, double hi, int count)
{
    if (!(lo > 0.0) || !(hi > 0.0) || count < 1) {
        throw DimensionError("logGrid: bounds must be positive and count at least 1");
    }
    std::vector<double> grid;
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        grid.push_back(std::pow(10.0, a + f * (b - a)));
    }
    return grid;
}

std::vector<LambdaScore> sweepLambda(const Tensor3& a, const Tensor3& b, const Tensor3& clean,
                                     const std::vector<double>& lambdas, const Transform& t)
{
    std::vector<LambdaScore> scores;
    for (double lambda : lambdas) {
        scores.push_back({lambda, psnr(deblur(a, b, lambda, t), clean)});
    }
    return scores;
}

Tensor3 syntheticImage(Index n)
{
    if (n < 1) {
        throw DimensionError("syntheticImage: n must be positive");
    }
    Tensor3 img(n, n, 3);
    const double nd = static_cast<double>(n);
    for (Index i = 0; i < n; ++i) {
        const double y = static_cast<double>(i) / nd;
        for (Index j = 0; j < n; ++j) {
            const double x = static_cast<double>(j) / nd;
            const bool disc = (x - 0.35) * (x - 0.35) + (y - 0.4) * (y - 0.4) < 0.05;
            const bool box = x > 0.5 && x < 0.85 && y > 0.2 && y < 0.7;
            img(i, j, 0) = 0.2 + (disc ? 0.6 : 0.0);
            img(i, j, 1) = 0.3 + (box ? 0.5 : 0.0) + 0.1 * x;
            img(i, j, 2) = 0.5 + 0.4 * std::sin(6.0 * x) * std::cos(4.0 * y);
        }
    }
    return clampToUnit(img);
}

Tensor3 readPng(const std::filesystem::path& path)
{
    FilePtr file(std::fopen(path.string().c_str(), "rb"));
    if (!file) {
        throw IoError("cannot open " + path.string());
    }
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_stdio(&image, file.get())) {
        throw IoError(path.string() + ": " + image.message);
    }
    image.format = PNG_FORMAT_RGB;
    std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        png_image_free(&image);
        throw IoError(path.string() + ": " + image.message);
    }
    const auto w = static_cast<Index>(image.width);
    const auto h = static_cast<Index>(image.height);
    if (w != h) {
        throw DimensionError(path.string() + ": image is " + std::to_string(w) + "x" +
                             std::to_string(h) + ", only square images are supported");
    }
    Tensor3 out(h, w, 3);
    for (Index i = 0; i < h; ++i) {
        for (Index j = 0; j < w; ++j) {
            for (Index c = 0; c < 3; ++c) {
                out(i, j, c) = buffer[static_cast<std::size_t>((i * w + j) * 3 + c)] / 255.0;
            }
        }
    }
    return out;
}

void writePng(const std::filesystem::path& path, const Tensor3& img)
{
    if (img.depth() != 3) {
        throw DimensionError("writePng: expected 3 channels, got " + std::to_string(img.depth()));
    }
    const Index h = img.rows();
    const Index w = img.cols();
    std::vector<png_byte> buffer(static_cast<std::size_t>(h * w * 3));
    for (Index i = 0; i < h; ++i) {
        for (Index j = 0; j < w; ++j) {
            for (Index c = 0; c < 3; ++c) {
                buffer[static_cast<std::size_t>((i * w + j) * 3 + c)] = toByte(img(i, j, c).real());
            }
        }
    }
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(w);
    image.height = static_cast<png_uint_32>(h);
    image.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&image, path.string().c_str(), 0, buffer.data(), 0, nullptr)) {
        throw IoError(path.string() + ": " + image.message);
    }
}

} // namespace tgi
