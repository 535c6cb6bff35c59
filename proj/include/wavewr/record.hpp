#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wavewr {

/// Per-iteration interface errors of one run. Entry 0 is the initial guess.
struct ConvergenceRecord {
    std::string method;
    double theta = 0.0;
    std::vector<double> errors;
    std::vector<double> wall_seconds;  ///< per iteration; entry 0 is 0
    std::optional<std::uint64_t> seed;
    /// First iteration whose error is <= tolerance * error(0); nullopt if never reached.
    std::optional<std::size_t> iterations_to_tolerance;

    double initial_error() const { return errors.empty() ? 0.0 : errors.front(); }
    double relative(std::size_t k) const;
};

/// Smallest k with errors[k] <= rel_tol * errors[0].
std::optional<std::size_t> iterations_to(const std::vector<double>& errors, double rel_tol);

}  // namespace wavewr
