#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "wavewr/bounds.hpp"
#include "wavewr/errors.hpp"
#include "wavewr/runner.hpp"
#include "wavewr/scenarios.hpp"

using namespace wavewr;

int main(int argc, char** argv) {
    CLI::App app{"Waveform relaxation experiments for the wave equation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string run_out;
    auto* run = app.add_subcommand("run", "execute one configuration file");
    run->add_option("config", config_path, "configuration file")->required();
    run->add_option("-o,--out", run_out, "output directory (default: the config's output.dir)");

    std::string scenario_name;
    std::string scenario_out = "output";
    auto* scenario = app.add_subcommand("scenario", "run a named experiment");
    scenario->add_option("name", scenario_name, "scenario name, see `list`")->required();
    scenario->add_option("-o,--out", scenario_out, "output directory")->capture_default_str();

    auto* list = app.add_subcommand("list", "list the named experiments");

    std::string method;
    double T = 0.0, hmin = 0.0, c = 0.0;
    auto* predict = app.add_subcommand("predict", "iterations guaranteed by the finite-step bounds");
    predict->add_option("method", method, "nnwr-2sub-1d | nnwr-multi-1d | nnwr-2d | dnwr-2sub-1d | dnwr-multi-1d | dnwr-2d")
        ->required();
    predict->add_option("T", T, "time window")->required();
    predict->add_option("hmin", hmin, "smallest subdomain width")->required();
    predict->add_option("c", c, "wave speed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            const RunConfig cfg = load_config(config_path);
            const auto dir = run_out.empty() ? std::filesystem::path(cfg.output_dir) : std::filesystem::path(run_out);
            std::cout << write_outputs(cfg, execute(cfg), dir).string() << "\n";
        } else if (*scenario) {
            for (const auto& p : run_scenario(scenario_name, scenario_out)) std::cout << p.string() << "\n";
        } else if (*list) {
            for (const auto& s : scenario_registry()) std::cout << s.name << "  " << s.description << "\n";
        } else if (*predict) {
            std::cout << theoretical_iterations(parse_bound_method(method), T, hmin, c) << "\n";
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
