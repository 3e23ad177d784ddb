#include "tgi/gallery.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "tgi/io.hpp"
#include "tgi/rng.hpp"

namespace tgi {

namespace {

void requirePositive(Index p, const char* op)
{
    if (p < 1) {
        throw DimensionError(std::string(op) + ": p must be at least 1");
    }
}

// Orthonormal DCT-II: rows are frequencies, columns are samples.
Eigen::MatrixXd dct2(Index p)
{
    Eigen::MatrixXd c(p, p);
    const double pd = static_cast<double>(p);
    for (Index j = 0; j < p; ++j) {
        const double alpha = j == 0 ? std::sqrt(1.0 / pd) : std::sqrt(2.0 / pd);
        for (Index k = 0; k < p; ++k) {
            c(j, k) = alpha * std::cos(std::numbers::pi * (2.0 * k + 1.0) * j / (2.0 * pd));
        }
    }
    return c;
}

constexpr int kRandomAttempts = 8;

} // namespace

Transform dftTransform(Index p)
{
    requirePositive(p, "dftTransform");
    Matrix m(p, p);
    for (Index j = 0; j < p; ++j) {
        for (Index k = 0; k < p; ++k) {
            // Reduce jk mod p first so the angle stays small and exact cases
            // (p = 2, 4) come out exactly.
            const Index e = (j * k) % p;
            if (4 * e == p) {
                m(j, k) = Complex(0.0, -1.0);
            } else if (2 * e == p) {
                m(j, k) = Complex(-1.0, 0.0);
            } else if (4 * e == 3 * p) {
                m(j, k) = Complex(0.0, 1.0);
            } else {
                const double angle = -2.0 * std::numbers::pi * static_cast<double>(e) /
                                     static_cast<double>(p);
                m(j, k) = std::polar(1.0, angle);
            }
        }
    }
    return Transform(std::move(m));
}

Transform dctTransform(Index p)
{
    requirePositive(p, "dctTransform");
    const Eigen::MatrixXd c = dct2(p);
    Eigen::MatrixXd shift = Eigen::MatrixXd::Identity(p, p);
    for (Index i = 0; i + 1 < p; ++i) {
        shift(i, i + 1) = 1.0;
    }
    const Eigen::VectorXd w = c.col(0);
    const Eigen::MatrixXd m = w.cwiseInverse().asDiagonal() * (c * shift);
    return Transform(m.cast<Complex>());
}

Transform randomInvertibleTransform(Index p, std::uint64_t seed)
{
    requirePositive(p, "randomInvertibleTransform");
    for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
        Rng rng(seed + static_cast<std::uint64_t>(attempt));
        Matrix m(p, p);
        for (Index i = 0; i < p; ++i) {
            for (Index j = 0; j < p; ++j) {
                m(i, j) = rng.uniform();
            }
        }
        try {
            return Transform(std::move(m));
        } catch (const NumericalError&) {
            // redraw with the next seed
        }
    }
    throw NumericalError("randomInvertibleTransform: no invertible draw after " +
                         std::to_string(kRandomAttempts) + " attempts");
}

Transform identityTransform(Index p)
{
    requirePositive(p, "identityTransform");
    return Transform(Matrix::Identity(p, p));
}

TransformKind TransformKind::parse(std::string_view spec)
{
    TransformKind kind;
    if (spec == "dft") {
        kind.tag = Tag::Dft;
    } else if (spec == "dct") {
        kind.tag = Tag::Dct;
    } else if (spec == "identity") {
        kind.tag = Tag::Identity;
    } else if (spec.starts_with("rand:")) {
        kind.tag = Tag::Random;
        const auto digits = spec.substr(5);
        const auto* end = digits.data() + digits.size();
        auto [ptr, ec] = std::from_chars(digits.data(), end, kind.seed);
        if (digits.empty() || ec != std::errc() || ptr != end) {
            throw DimensionError("invalid transform seed in '" + std::string(spec) + "'");
        }
    } else if (spec.starts_with("file:") && spec.size() > 5) {
        kind.tag = Tag::File;
        kind.path = std::string(spec.substr(5));
    } else {
        throw DimensionError("unknown transform '" + std::string(spec) +
                             "' (expected dft, dct, identity, rand:<seed> or file:<path>)");
    }
    return kind;
}

std::string TransformKind::toString() const
{
    switch (tag) {
    case Tag::Dft:
        return "dft";
    case Tag::Dct:
        return "dct";
    case Tag::Identity:
        return "identity";
    case Tag::Random:
        return "rand:" + std::to_string(seed);
    case Tag::File:
        return "file:" + path;
    }
    return {};
}

Transform makeTransform(const TransformKind& kind, Index p)
{
    switch (kind.tag) {
    case TransformKind::Tag::Dft:
        return dftTransform(p);
    case TransformKind::Tag::Dct:
        return dctTransform(p);
    case TransformKind::Tag::Identity:
        return identityTransform(p);
    case TransformKind::Tag::Random:
        return randomInvertibleTransform(p, kind.seed);
    case TransformKind::Tag::File: {
        Matrix m = io::readTransformMatrix(kind.path);
        if (m.rows() != p) {
            throw DimensionError("transform file " + kind.path + " is " +
                                 std::to_string(m.rows()) + "x" + std::to_string(m.rows()) +
                                 ", tensor has " + std::to_string(p) + " slices");
        }
        return Transform(std::move(m));
    }
    }
    throw DimensionError("makeTransform: unknown kind");
}

} // namespace tgi
