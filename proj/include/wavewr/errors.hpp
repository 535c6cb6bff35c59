#pragma once

#include <stdexcept>
#include <string>

namespace wavewr {

/// Input rejected before any computation (bad geometry, CFL, ranges).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what);
};

/// Failure while computing (shape mismatch between traces, term-cap overflow).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what);
};

}  // namespace wavewr
