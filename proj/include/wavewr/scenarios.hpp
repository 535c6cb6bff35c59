#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "wavewr/config.hpp"

namespace wavewr {

/// A named experiment: a list of run configurations, one CSV curve each, or a
/// custom writer for experiments that are not convergence curves.
struct Scenario {
    std::string name;
    std::string description;
    std::function<std::vector<RunConfig>()> configs;
    std::function<std::vector<std::filesystem::path>(const std::filesystem::path&)> custom;
};

const std::vector<Scenario>& scenario_registry();
const Scenario& find_scenario(const std::string& name);

/// Runs every curve of the scenario into `dir`; returns the written CSV paths.
std::vector<std::filesystem::path> run_scenario(const std::string& name, const std::filesystem::path& dir);

}  // namespace wavewr
