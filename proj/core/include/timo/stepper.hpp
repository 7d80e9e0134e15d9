#ifndef TIMO_STEPPER_HPP
#define TIMO_STEPPER_HPP

#include <functional>
#include <vector>

#include "timo/assembly.hpp"
#include "timo/banded.hpp"
#include "timo/grid.hpp"
#include "timo/params.hpp"

namespace timo {

/// The four unknown fields at one time level. Interior levels hold I-1 values per
/// field; boundary-extended levels hold I+1.
struct FieldLevel {
    std::vector<double> phi;
    std::vector<double> psi;
    std::vector<double> theta;
    std::vector<double> q;

    [[nodiscard]] static FieldLevel zeros(std::size_t n);
    friend bool operator==(const FieldLevel&, const FieldLevel&) = default;
};

struct SimulationState {
    FieldLevel prev;  ///< level n-1
    FieldLevel curr;  ///< level n
    long step = 0;    ///< n
    double time = 0.0;
};

using Profile = std::function<double(double)>;

/// Initial positions (suffix 0) and velocities (suffix 1) as functions of x in [0,1].
/// psi and q must vanish at both ends.
struct InitialData {
    Profile phi0, phi1;
    Profile psi0, psi1;
    Profile theta0, theta1;
    Profile q0, q1;
};

/// All positions zero, phi1 = cos(pi x), psi1 = sin(2 pi x),
/// theta1 = -(2 pi delta / rho3) cos(2 pi x), q1 = 0.
[[nodiscard]] InitialData paper_initial_data(const PhysicalParameters& p);
[[nodiscard]] InitialData zero_initial_data();

/// Treatment of the beta q damping term in the heat-flux update.
enum class FluxDamping {
    Averaged,  ///< beta (q^{n+1} + q^{n-1}) / 2; neutral computational mode
    Centered,  ///< beta q^n exactly as in A4 Q+ = B4 Q- - C4 Q - D4 Theta; mode grows like e^{beta t / tau}
};

/// Construction of level 1 from the initial data.
enum class Startup {
    /// phi, psi: second-order Taylor with the acceleration implied by the scheme matrices;
    /// theta, q: first-order Taylor with the rates implied by the discrete first-order
    /// equations (theta1, q1 are not read).
    Taylor2,
    /// w^1 = w^0 + kappa w_1 for all four fields using the supplied velocities.
    Taylor1,
};

struct SchemeOptions {
    FluxDamping flux_damping = FluxDamping::Averaged;
    Startup startup = Startup::Taylor2;
    double blowup_threshold = 1e12;
};

/// Throws ConfigError when psi or q initial data are nonzero (beyond 1e-12) at x = 0 or 1.
void check_boundary_compatibility(const InitialData& d);

/// State at n = 1: prev = level 0 sampled from the data, curr = level 1 per `opts.startup`.
[[nodiscard]] SimulationState build_initial_levels(const InitialData& d, const Mesh& mesh,
                                                   const SchemeMatrices& m,
                                                   const SchemeOptions& opts = {});

/// Full-node fields from interior values: phi_0 = phi_1, phi_I = phi_{I-1} and the same
/// for theta (ghost rule for the zero-flux ends); psi and q are zero at both ends.
[[nodiscard]] FieldLevel extend_to_boundary(const FieldLevel& interior);

struct StepWorkspace {
    SolveWorkspace solve;
    std::vector<double> rhs;
    FieldLevel next;
};

/// Advances (n-1, n) to (n, n+1), solving in the order phi, psi, theta, q.
/// Throws BlowUpError if any new value is non-finite or exceeds opts.blowup_threshold.
void step(SimulationState& state, const SchemeMatrices& m, double kappa,
          const SchemeOptions& opts, StepWorkspace& ws);

/// Levels n-1, n, n+1 around the observed level n.
struct StepView {
    long n;
    double t;
    const FieldLevel& older;
    const FieldLevel& current;
    const FieldLevel& newer;
};

using Observer = std::function<void(const StepView&)>;

struct RunOptions {
    SchemeOptions scheme;
    long stride = 20;  ///< observer fires at n = 1, 1 + stride, 1 + 2 stride, ...
};

/// Integrates from level 1 up to level N. Errors from the step are rethrown with the step
/// index and time in the message.
[[nodiscard]] SimulationState run(const Mesh& mesh, const SchemeMatrices& m, const InitialData& d,
                                  const Observer& observer, const RunOptions& opts = {});
[[nodiscard]] SimulationState run(const PhysicalParameters& p, const GridConfig& cfg,
                                  const InitialData& d, const Observer& observer,
                                  const RunOptions& opts = {});

}  // namespace timo

#endif  // TIMO_STEPPER_HPP
