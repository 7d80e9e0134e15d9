#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "timo_app/commands.hpp"

using namespace timo;
using namespace timo::app;

namespace {

template <class F>
int guarded(F&& body) {
    try {
        body();
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out || !(out << text)) {
        throw IoError("cannot write '" + path + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compact fourth-order solver for the thermoelastic Timoshenko system "
                 "with second sound"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    long snapshot_stride = -1;
    int levels = 4;
    std::string series_path;
    std::string snapshots_path;

    auto* simulate = app.add_subcommand("simulate", "run the scheme and write energy series");
    simulate->add_option("--config", config_path, "configuration file")->required();
    simulate->add_option("--out", out_path, "series CSV path (overrides 'output')");
    simulate->add_option("--snapshots", snapshot_stride, "write field snapshots every N steps");

    auto* mu = app.add_subcommand("mu", "print the stability number and regime");
    mu->add_option("--config", config_path, "configuration file")->required();

    auto* convergence = app.add_subcommand("convergence", "spatial and temporal order study");
    convergence->add_option("--config", config_path, "configuration file")->required();
    convergence->add_option("--levels", levels, "number of refinement levels")->capture_default_str();
    convergence->add_option("--out", out_path, "CSV path (default: stdout)");

    auto* plot = app.add_subcommand("plot", "emit a gnuplot script");
    plot->add_option("--series", series_path, "series CSV")->required();
    plot->add_option("--snapshots", snapshots_path, "snapshot CSV");
    plot->add_option("--out", out_path, "script path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kConfigError;
    }

    if (*simulate) {
        return guarded([&] {
            RunConfig cfg = load_config(config_path);
            if (!out_path.empty()) {
                cfg.output = out_path;
            }
            if (snapshot_stride >= 0) {
                cfg.snapshot_stride = snapshot_stride;
            }
            const SimulateOutputs outputs = default_outputs(cfg);
            const SimulateResult r = cmd_simulate(cfg, outputs);
            std::cout << r.summary;
            std::cout << "series written to " << outputs.series << '\n';
            if (outputs.snapshots) {
                std::cout << "snapshots written to " << *outputs.snapshots << '\n';
            }
        });
    }
    if (*mu) {
        return guarded([&] { std::cout << cmd_mu(load_config(config_path)) << '\n'; });
    }
    if (*convergence) {
        return guarded([&] {
            const std::string csv = render_convergence(cmd_convergence(load_config(config_path), levels));
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                write_text(out_path, csv);
            }
        });
    }
    return guarded([&] {
        std::string stem = out_path;
        const auto dot = stem.rfind('.');
        const auto slash = stem.rfind('/');
        if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
            stem.resize(dot);
        }
        const std::optional<std::string> snaps =
            snapshots_path.empty() ? std::nullopt : std::optional<std::string>(snapshots_path);
        write_text(out_path, cmd_plot(series_path, snaps, stem));
    });
}
