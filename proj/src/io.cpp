#include "tgi/io.hpp"

#include <fstream>
#include <string>

namespace tgi::io {

namespace {

using nlohmann::json;

std::vector<double> readArray(const json& j, const char* key, std::size_t expected)
{
    if (!j.contains(key)) {
        throw IoError(std::string("missing \"") + key + "\" array");
    }
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != expected) {
        throw IoError(std::string("\"") + key + "\" must be an array of " +
                      std::to_string(expected) + " numbers");
    }
    std::vector<double> values;
    values.reserve(expected);
    for (const auto& v : arr) {
        if (!v.is_number()) {
            throw IoError(std::string("\"") + key + "\" contains a non-numeric value");
        }
        values.push_back(v.get<double>());
    }
    return values;
}

Index readDim(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw IoError(std::string("missing integer field \"") + key + "\"");
    }
    const auto v = j.at(key).get<long long>();
    if (v <= 0) {
        throw IoError(std::string("field \"") + key + "\" must be positive");
    }
    return static_cast<Index>(v);
}

template <typename Range>
json splitParts(const Range& values, bool& hasImag)
{
    json re = json::array();
    json im = json::array();
    hasImag = false;
    for (const Complex& z : values) {
        re.push_back(z.real());
        im.push_back(z.imag());
        hasImag = hasImag || z.imag() != 0.0;
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

} // namespace

json tensorToJson(const Tensor3& t)
{
    bool hasImag = false;
    json parts = splitParts(t.data(), hasImag);
    json j{{"m", t.rows()}, {"n", t.cols()}, {"p", t.depth()}, {"re", std::move(parts["re"])}};
    if (hasImag) {
        j["im"] = std::move(parts["im"]);
    }
    return j;
}

Tensor3 tensorFromJson(const json& j)
{
    if (!j.is_object()) {
        throw IoError("T3J: top-level value must be an object");
    }
    const Index m = readDim(j, "m");
    const Index n = readDim(j, "n");
    const Index p = readDim(j, "p");
    const auto count = static_cast<std::size_t>(m * n * p);
    const auto re = readArray(j, "re", count);
    std::vector<double> im(count, 0.0);
    if (j.contains("im")) {
        im = readArray(j, "im", count);
    }
    std::vector<Complex> entries(count);
    for (std::size_t i = 0; i < count; ++i) {
        entries[i] = Complex(re[i], im[i]);
    }
    return Tensor3(m, n, p, std::move(entries));
}

json matrixToJson(const Matrix& m)
{
    std::vector<Complex> rowMajor;
    rowMajor.reserve(static_cast<std::size_t>(m.size()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index k = 0; k < m.cols(); ++k) {
            rowMajor.push_back(m(i, k));
        }
    }
    bool hasImag = false;
    json parts = splitParts(rowMajor, hasImag);
    json j{{"p", m.rows()}, {"re", std::move(parts["re"])}};
    if (hasImag) {
        j["im"] = std::move(parts["im"]);
    }
    return j;
}

Matrix matrixFromJson(const json& j)
{
    if (!j.is_object()) {
        throw IoError("transform file: top-level value must be an object");
    }
    const Index p = readDim(j, "p");
    const auto count = static_cast<std::size_t>(p * p);
    const auto re = readArray(j, "re", count);
    std::vector<double> im(count, 0.0);
    if (j.contains("im")) {
        im = readArray(j, "im", count);
    }
    Matrix m(p, p);
    for (Index i = 0; i < p; ++i) {
        for (Index k = 0; k < p; ++k) {
            const auto idx = static_cast<std::size_t>(i * p + k);
            m(i, k) = Complex(re[idx], im[idx]);
        }
    }
    return m;
}

json readJson(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void writeJson(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << j.dump() << '\n';
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

Tensor3 readTensor(const std::filesystem::path& path)
{
    try {
        return tensorFromJson(readJson(path));
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    } catch (const DimensionError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void writeTensor(const std::filesystem::path& path, const Tensor3& t)
{
    writeJson(path, tensorToJson(t));
}

Matrix readTransformMatrix(const std::filesystem::path& path)
{
    try {
        return matrixFromJson(readJson(path));
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void writeTransformMatrix(const std::filesystem::path& path, const Matrix& m)
{
    writeJson(path, matrixToJson(m));
}

} // namespace tgi::io
