#include "wavewr/errors.hpp"

namespace wavewr {

ValidationError::ValidationError(const std::string& what) : std::invalid_argument(what) {}

SolverError::SolverError(const std::string& what) : std::runtime_error(what) {}

}  // namespace wavewr
