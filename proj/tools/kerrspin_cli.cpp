#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "kerrspin/config.hpp"
#include "kerrspin/errors.hpp"
#include "kerrspin/simulation.hpp"
#include "kerrspin/validation.hpp"

namespace {

// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 runtime/domain error.
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int do_simulate(const std::string& config_path, const std::string& out_dir) {
    const kerrspin::RunConfig cfg = kerrspin::load_config(config_path);
    std::filesystem::create_directories(out_dir);
    const kerrspin::SimulationResult res = kerrspin::run_simulation(cfg);
    const std::string csv = out_dir + "/" + cfg.label + ".csv";
    kerrspin::write_csv(csv, res.rows);
    std::cout << "wrote " << csv << "\n" << res.summary();
    return res.tolerances_met ? 0 : kExitValidation;
}

int do_figures(const std::string& config_path, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    int status = 0;
    if (config_path.empty()) {
        for (int i = 1; i <= 3; ++i) {
            const kerrspin::RunConfig cfg = kerrspin::caption_preset(i);
            const kerrspin::SimulationResult res = kerrspin::run_simulation(cfg);
            kerrspin::write_csv(out_dir + "/" + cfg.label + ".csv", res.rows);
            for (const auto& f : kerrspin::emit_figures(res, out_dir)) {
                std::cout << "wrote " << f << "\n";
            }
            if (!res.tolerances_met) status = kExitValidation;
        }
        return status;
    }
    const kerrspin::RunConfig cfg = kerrspin::load_config(config_path);
    const kerrspin::SimulationResult res = kerrspin::run_simulation(cfg);
    kerrspin::write_csv(out_dir + "/" + cfg.label + ".csv", res.rows);
    for (const auto& f : kerrspin::emit_figures(res, out_dir)) {
        std::cout << "wrote " << f << "\n";
    }
    return res.tolerances_met ? 0 : kExitValidation;
}

int do_validate(std::uint64_t seed, const std::string& params) {
    double M = 1.0, a = 0.8;
    if (!params.empty()) {
        std::istringstream in(params);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw kerrspin::ConfigError("--params: expected M=..,a=.., got '" + item + "'");
            }
            const std::string key = item.substr(0, eq);
            const double value = std::stod(item.substr(eq + 1));
            if (key == "M") {
                M = value;
            } else if (key == "a") {
                a = value;
            } else {
                throw kerrspin::ConfigError("--params: unknown key '" + key + "'");
            }
        }
    }
    const auto results = kerrspin::run_validation_suite(seed, M, a);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << ": " << r.name << " — " << r.detail << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kerr spin-precession toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::uint64_t seed = 1;
    std::string params;

    auto* sim = app.add_subcommand("simulate", "run one configured orbit and write a CSV");
    sim->add_option("--config", config_path, "config file")->required();
    sim->add_option("--out", out_dir, "output directory")->required();

    auto* fig = app.add_subcommand("figures", "emit the orbit/curvature panels");
    fig->add_option("--config", config_path, "config file (omit for the built-in presets)");
    fig->add_option("--out", out_dir, "output directory")->required();

    auto* val = app.add_subcommand("validate", "run the validation suite");
    val->add_option("--seed", seed, "PRNG seed")->required();
    val->add_option("--params", params, "overrides, e.g. M=1,a=0.8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (sim->parsed()) return do_simulate(config_path, out_dir);
        if (fig->parsed()) return do_figures(config_path, out_dir);
        return do_validate(seed, params);
    } catch (const kerrspin::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
