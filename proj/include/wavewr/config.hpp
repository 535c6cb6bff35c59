#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wavewr/problem.hpp"

namespace wavewr {

/// One run described in a flat INI-style file:
///
///   [run]        method, name
///   [problem]    dimension, x_lo, x_hi, y_lo, y_hi, T, speed, u0, v0, source,
///                g_lo, g_hi, g_ylo, g_yhi
///   [partition]  interfaces, dx, dt, dy, overlap
///   [iteration]  theta, p, max_iterations, tolerance, guess, parallel
///   [output]     dir
///
/// Data entries are expressions: u0 and v0 in x (and y), source in x (y) t,
/// g_lo and g_hi in t (in y, t for strips), g_ylo and g_yhi in x, t.
struct RunConfig {
    enum class Method { nnwr, dnwr, swr_classical, swr_optimized, oracle_nnwr };

    Method method = Method::nnwr;
    std::string name = "run";

    int dimension = 1;
    double x_lo = 0.0;
    double x_hi = 1.0;
    double y_lo = 0.0;
    double y_hi = 3.141592653589793;
    double T = 1.0;
    /// "constant c" | "piecewise c1 c2 ..." (one per subdomain) |
    /// "table x1:c1 x2:c2 ..." | "expr <expression in x>"
    std::string speed = "constant 1";
    std::string u0 = "0";
    std::string v0 = "0";
    std::string source = "0";
    std::string g_lo = "0";
    std::string g_hi = "0";
    std::string g_ylo = "0";
    std::string g_yhi = "0";

    std::vector<double> interfaces;
    double dx = 0.02;
    std::vector<double> dt{0.02};
    double dy = 0.0;
    std::size_t overlap = 0;

    double theta = 0.25;
    double p = 0.0;
    std::size_t max_iterations = 10;
    double tolerance = 0.0;
    /// "poly-t2" | "t-sin-y" | "zero" | "random <seed>"
    std::string guess = "poly-t2";
    bool parallel = false;

    std::string output_dir = "output";

    /// Checks cross-field constraints; throws ValidationError naming the key.
    void validate() const;
};

std::string to_string(RunConfig::Method m);
RunConfig::Method parse_method(const std::string& s);

/// Parse errors carry the line number; `origin` names the source in messages.
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_config(const std::filesystem::path& path);
/// Text parse_config reads back to an equal config.
std::string serialize_config(const RunConfig& cfg);
nlohmann::json to_json(const RunConfig& cfg);

WaveProblem1D make_problem_1d(const RunConfig& cfg);
WaveProblem2D make_problem_2d(const RunConfig& cfg);
/// Speed profile from the speed entry; expr speeds are sampled at dx spacing
/// into a table.
SpeedProfile make_speed(const RunConfig& cfg);

/// Seed of a "random <seed>" guess.
std::optional<std::uint64_t> guess_seed(const std::string& guess);

}  // namespace wavewr
