#ifndef TIMO_PARAMS_HPP
#define TIMO_PARAMS_HPP

#include <span>
#include <string>
#include <string_view>

namespace timo {

/// Material constants of the thermoelastic Timoshenko system with Cattaneo heat flux:
///
///   rho1 phi_tt - k (phi_x + psi)_x                      = 0
///   rho2 psi_tt - b psi_xx + k (phi_x + psi) + delta theta_x + psi_t = 0
///   rho3 theta_t + q_x + delta psi_xt                     = 0
///   tau q_t + beta q + theta_x                           = 0
struct PhysicalParameters {
    double rho1 = 1.0;
    double rho2 = 1.0;
    double rho3 = 1.0;
    double k = 1.0;      ///< shear stiffness
    double b = 1.0;      ///< bending stiffness
    double delta = 1.0;  ///< thermal coupling
    double beta = 1.0;   ///< heat-flux damping
    double tau = 1.0;    ///< Cattaneo relaxation time

    friend bool operator==(const PhysicalParameters&, const PhysicalParameters&) = default;
};

/// Throws ConfigError naming the first non-positive or non-finite field.
void validate(const PhysicalParameters& p);

/// mu = (tau - rho1/(k rho3)) (rho2/b - rho1/k) - tau delta^2 rho1 / (b k rho3).
[[nodiscard]] double stability_number(const PhysicalParameters& p);

enum class Regime { Zero, NonZero };

[[nodiscard]] std::string_view to_string(Regime r);

/// Zero iff |mu| <= tol. Requires tol > 0.
[[nodiscard]] Regime classify_regime(double mu, double tol);

/// Default tolerance for classify_regime: 1e-9 scaled by the magnitude of the two
/// terms whose difference forms mu (never below 1e-9).
[[nodiscard]] double regime_tolerance(const PhysicalParameters& p);

struct ScenarioPreset {
    std::string name;
    PhysicalParameters parameters;
    std::string description;
};

/// "mu_zero" or "mu_nonzero". Throws ConfigError listing the valid names otherwise.
[[nodiscard]] ScenarioPreset lookup_preset(std::string_view name);

[[nodiscard]] std::span<const std::string_view> preset_names();

}  // namespace timo

#endif  // TIMO_PARAMS_HPP
