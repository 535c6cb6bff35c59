#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "wavewr/config.hpp"
#include "wavewr/nnwr.hpp"
#include "wavewr/record.hpp"

namespace wavewr {

struct RunOutput {
    ConvergenceRecord record;
    nlohmann::json sidecar;
};

InitialGuess make_guess(const std::string& spec);

/// Performs the run. Deterministic: wall times are kept in the record but are
/// not part of the sidecar.
RunOutput execute(const RunConfig& cfg);

/// `iteration,error` with one row per iteration, 17 significant digits.
std::string format_csv(const ConvergenceRecord& rec);

/// Writes <dir>/<name>.csv and <dir>/<name>.json; returns the CSV path.
std::filesystem::path write_outputs(const RunConfig& cfg, const RunOutput& out, const std::filesystem::path& dir);

/// Writes `text` to `path`, creating parent directories; throws SolverError
/// when the path is not writable.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace wavewr
