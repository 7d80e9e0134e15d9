#ifndef TIMO_APP_CONFIG_HPP
#define TIMO_APP_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "timo/diagnostics.hpp"
#include "timo/error.hpp"
#include "timo/grid.hpp"
#include "timo/params.hpp"
#include "timo/stepper.hpp"

namespace timo::app {

/// Reading or writing a file failed.
class IoError : public Error {
public:
    using Error::Error;
};

struct ModeTerm {
    int mode = 0;
    double amplitude = 0.0;

    friend bool operator==(const ModeTerm&, const ModeTerm&) = default;
};

using ModeList = std::vector<ModeTerm>;

/// Initial data as Fourier sums: cos(k pi x) for phi and theta, sin(k pi x) for psi and q,
/// so every profile satisfies the boundary conditions.
struct ModeData {
    ModeList phi0, phi1, psi0, psi1, theta0, theta1, q0, q1;

    friend bool operator==(const ModeData&, const ModeData&) = default;
};

enum class InitialKind { Paper, Zero, Modes };

/// Explicit values that replace the corresponding preset constant.
struct ParameterOverrides {
    std::optional<double> rho1, rho2, rho3, k, b, delta, beta, tau;

    friend bool operator==(const ParameterOverrides&, const ParameterOverrides&) = default;
};

struct RunConfig {
    std::string preset = "mu_zero";  ///< "none" requires all eight constants explicitly
    ParameterOverrides overrides;
    GridConfig grid;
    InitialKind initial = InitialKind::Paper;
    ModeData modes;
    long stride = 20;
    long snapshot_stride = 0;  ///< 0 disables snapshots
    std::string output = "series.csv";
    std::optional<double> fit_lo;
    std::optional<double> fit_hi;
    FluxDamping flux_damping = FluxDamping::Averaged;
    Startup startup = Startup::Taylor2;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses `key = value` lines; `#` starts a comment. Omitted keys keep the RunConfig
/// defaults. Syntax errors carry the line number; semantic errors name the key.
/// Both are ConfigError.
[[nodiscard]] RunConfig parse_config(std::string_view text);
[[nodiscard]] RunConfig load_config(const std::string& path);

/// Inverse of parse_config: parse_config(render_config(c)) == c.
[[nodiscard]] std::string render_config(const RunConfig& cfg);

[[nodiscard]] PhysicalParameters resolve_parameters(const RunConfig& cfg);
[[nodiscard]] InitialData resolve_initial_data(const RunConfig& cfg, const PhysicalParameters& p);
[[nodiscard]] FitWindow resolve_window(const RunConfig& cfg);

/// Sum of amplitude * basis(mode pi x).
[[nodiscard]] Profile cosine_series(const ModeList& modes);
[[nodiscard]] Profile sine_series(const ModeList& modes);

}  // namespace timo::app

#endif  // TIMO_APP_CONFIG_HPP
