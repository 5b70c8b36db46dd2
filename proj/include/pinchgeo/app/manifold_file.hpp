#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pinchgeo/frame_search.hpp"
#include "pinchgeo/immersion.hpp"
#include "pinchgeo/model_spaces.hpp"

namespace pinchgeo::app {

/// Global settings shared by every entry of a manifold file.
struct FileOptions {
    std::uint64_t seed = 42;
    /// Multistart restarts for the frame searches.
    int budget = 32;
    /// Finite-difference step; 0 selects each immersion's default.
    double step = 0.0;
};

struct ModelEntry {
    ModelId model;
    /// Sample the trigonometric parametrization instead of the closed form.
    bool numeric = false;
    int grid = 5;
};

using ManifoldEntry = std::variant<ModelEntry, ImmersionSpec>;

struct ManifoldFile {
    FileOptions options;
    std::vector<ManifoldEntry> entries;
};

/// Malformed manifold file. Syntax errors carry a 1-based line and column;
/// semantic errors carry the entry index and a zero line.
class FileError : public std::runtime_error {
public:
    FileError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The input is empty or only whitespace.
class EmptyFileError : public std::invalid_argument {
public:
    EmptyFileError() : std::invalid_argument("manifold file is empty") {}
};

/// Format:
///   {"options": {"seed": 42, "budget": 32, "step": 0},
///    "entries": [
///      {"model": "clifford", "n": 3, "lambda": 1.0},
///      {"model": "round_sphere", "n": 2, "r": 1.0, "numeric": true, "grid": 7},
///      {"model": "cylinder", "n": 4, "H0": 1.0},
///      {"name": "torus", "immersion": ["cos(u1)", "sin(u1)", ...],
///       "box": [[0, 6.283], [0, 6.283]], "grid": 9, "ambient": {"c": 0}}]}
/// "grid" is one count for every axis or one count per axis.
ManifoldFile parse_manifold_file(std::string_view text);

ManifoldFile load_manifold_file(const std::filesystem::path& path);

}  // namespace pinchgeo::app
