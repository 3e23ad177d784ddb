#pragma once

#include <filesystem>

#include <json.hpp>

#include "tgi/tensor3.hpp"

// T3J tensor files: {"m":int,"n":int,"p":int,"re":[...],"im":[...]} with m*n*p
// values in slice-major/row-major order; "im" may be omitted for real data.
// Transform files: {"p":int,"re":[...],"im":[...]} with a row-major p x p matrix.
// Doubles are written in shortest round-trip form.

namespace tgi::io {

nlohmann::json tensorToJson(const Tensor3& t);
Tensor3 tensorFromJson(const nlohmann::json& j);

nlohmann::json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const nlohmann::json& j);

Tensor3 readTensor(const std::filesystem::path& path);
void writeTensor(const std::filesystem::path& path, const Tensor3& t);

Matrix readTransformMatrix(const std::filesystem::path& path);
void writeTransformMatrix(const std::filesystem::path& path, const Matrix& m);

void writeJson(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json readJson(const std::filesystem::path& path);

} // namespace tgi::io
