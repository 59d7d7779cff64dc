// rabi_cli - scenario runner for the Rabi model solvers.
//
// Exit codes: 0 success, 2 config error, 3 solver failure, 4 Fock window
// overflow (message carries a suggested window).

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rabi/scenario.hpp"

namespace {

int run_one(const rabi::scenario::Scenario& sc, std::optional<double> rtol,
            std::optional<double> atol, int jobs) {
    try {
        const std::string manifest =
            rabi::scenario::run_scenario(sc, rtol, atol, jobs);
        std::printf("wrote %s\n", manifest.c_str());
        return 0;
    } catch (const rabi::scenario::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const rabi::ParameterError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const rabi::qrm::WindowOverflowError& e) {
        std::fprintf(stderr,
                     "window overflow: %s (suggested window [%ld, %ld])\n",
                     e.what(), e.suggested.n1, e.suggested.n2);
        return 4;
    } catch (const rabi::ode::IntegrationError& e) {
        std::fprintf(stderr,
                     "solver failure: %s (accepted %ld, rejected %ld, max "
                     "error %.3e)\n",
                     e.what(), e.stats.accepted_steps, e.stats.rejected_steps,
                     e.stats.max_error_estimate);
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum and semiclassical Rabi model scenario runner"};
    app.require_subcommand(1);

    std::optional<double> rtol, atol;
    int jobs = 1;
    app.add_option("--rtol", rtol, "Override relative tolerance for all runs");
    app.add_option("--atol", atol, "Override absolute tolerance for all runs");
    app.add_option("--jobs", jobs, "Number of runs to execute in parallel")
        ->check(CLI::PositiveNumber);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Run a JSON scenario config");
    run_cmd->add_option("config", config_path, "Path to the config file")
        ->required();

    std::string preset_name, preset_out = ".";
    auto* preset_cmd = app.add_subcommand("preset", "Run a bundled preset");
    preset_cmd->add_option("name", preset_name, "Preset name")->required();
    preset_cmd->add_option("--out", preset_out, "Output directory");

    auto* list_cmd =
        app.add_subcommand("list-presets", "List the bundled presets");

    CLI11_PARSE(app, argc, argv);

    if (list_cmd->parsed()) {
        for (const auto& name : rabi::scenario::preset_names()) {
            const auto cfg = rabi::scenario::preset_config(name);
            std::printf("%-18s %s\n", name.c_str(),
                        cfg["description"].get<std::string>().c_str());
        }
        return 0;
    }

    try {
        rabi::scenario::Scenario sc;
        if (run_cmd->parsed()) {
            sc = rabi::scenario::load_scenario(config_path);
        } else {
            auto cfg = rabi::scenario::preset_config(preset_name);
            cfg["output_dir"] = preset_out;
            sc = rabi::scenario::parse_scenario(cfg);
        }
        return run_one(sc, rtol, atol, jobs);
    } catch (const rabi::scenario::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
}
