#ifndef TIMO_APP_COMMANDS_HPP
#define TIMO_APP_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "timo_app/config.hpp"

namespace timo::app {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kConfigError = 1, kRuntimeError = 2, kIoError = 3 };

/// "mu = <value> (Zero|NonZero)"
[[nodiscard]] std::string cmd_mu(const RunConfig& cfg);

struct SimulateOutputs {
    std::string series;                  ///< CSV: t,energy,max_abs_phi,max_abs_psi,max_abs_theta,max_abs_q
    std::optional<std::string> snapshots;  ///< CSV: t,x,phi,psi,theta,q (written if snapshot_stride > 0)
    std::optional<std::string> summary;    ///< human-readable report
};

/// Output paths derived from cfg.output: "<stem>.csv", "<stem>_snapshots.csv", "<stem>_summary.txt".
[[nodiscard]] SimulateOutputs default_outputs(const RunConfig& cfg);

struct SimulateResult {
    TimeSeries series;
    double mu = 0.0;
    Regime regime = Regime::Zero;
    std::optional<DecayFit> exponential;
    std::optional<DecayFit> polynomial;
    std::optional<ModelSelection> selection;
    std::string fit_note;  ///< why no fit is available, if so
    double wall_seconds = 0.0;
    std::string summary;
};

/// Runs the scheme and writes the outputs. On blow-up the rows produced so far are
/// flushed before the BlowUpError propagates.
SimulateResult cmd_simulate(const RunConfig& cfg, const SimulateOutputs& out);

struct ConvergenceLine {
    std::string study;  ///< "spatial" or "temporal"
    double grid = 0.0;  ///< I for spatial, kappa for temporal
    double error = 0.0;
    std::optional<double> order;
};

/// Spatial: compact operator error on cos(pi x) for I = 8 * 2^j, j < levels.
/// Temporal (levels >= 3 only): scheme self-convergence under kappa halving at the
/// configured I and c, up to the configured T.
[[nodiscard]] std::vector<ConvergenceLine> cmd_convergence(const RunConfig& cfg, int levels);
[[nodiscard]] std::string render_convergence(const std::vector<ConvergenceLine>& lines);

/// Gnuplot script: max|phi| vs t, ln E vs t with the exponential fit over the default
/// window, and a phi(x, t) surface when a snapshot file is given.
[[nodiscard]] std::string cmd_plot(const std::string& series_path,
                                   const std::optional<std::string>& snapshots_path,
                                   const std::string& image_stem);

}  // namespace timo::app

#endif  // TIMO_APP_COMMANDS_HPP
