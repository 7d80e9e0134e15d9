#ifndef TIMO_DIAGNOSTICS_HPP
#define TIMO_DIAGNOSTICS_HPP

#include <optional>
#include <vector>

#include "timo/grid.hpp"
#include "timo/params.hpp"
#include "timo/stepper.hpp"

namespace timo {

struct EnergyOptions {
    /// Drop the uniform-translation part of the phi velocity before forming the kinetic
    /// term. A rigid translation phi = a + v t solves the scheme exactly, carries no strain
    /// and is never damped; the decay results concern the zero-mean part of the solution.
    bool exclude_rigid_translation = true;
};

/// Discrete energy at level n from levels n-1, n, n+1:
///
///   E = h/2 sum_i [rho1 (D_t phi)^2 + rho2 (D_t psi)^2 + rho3 theta^2 + tau q^2]   (interior nodes)
///     + h/2 sum_{i=0}^{I-1} [b (D_x psi)^2 + k (D_x phi + psi_mid)^2]              (cells)
///
/// D_t is the centered time difference, D_x the forward difference on boundary-extended
/// fields and psi_mid the cell average of psi.
[[nodiscard]] double discrete_energy(const FieldLevel& older, const FieldLevel& current,
                                     const FieldLevel& newer, const PhysicalParameters& p,
                                     const Mesh& mesh, const EnergyOptions& opts = {});

/// Energy of a level whose velocities are given directly (used at t = 0).
[[nodiscard]] double energy_with_velocities(const FieldLevel& current, std::span<const double> phi_t,
                                            std::span<const double> psi_t,
                                            const PhysicalParameters& p, const Mesh& mesh,
                                            const EnergyOptions& opts = {});

/// max_i |phi_i| over all nodes 0..I, boundary extension included.
[[nodiscard]] double max_displacement(const FieldLevel& interior);

struct SeriesRecord {
    long n = 0;
    double t = 0.0;
    double energy = 0.0;
    double max_abs_phi = 0.0;
    double max_abs_psi = 0.0;
    double max_abs_theta = 0.0;
    double max_abs_q = 0.0;

    friend bool operator==(const SeriesRecord&, const SeriesRecord&) = default;
};

using TimeSeries = std::vector<SeriesRecord>;

/// Record built from an observed step.
[[nodiscard]] SeriesRecord make_record(const StepView& view, const PhysicalParameters& p,
                                       const Mesh& mesh, const EnergyOptions& opts = {});

/// Record at t = 0 from the initial data and its prescribed velocities.
[[nodiscard]] SeriesRecord initial_record(const InitialData& d, const PhysicalParameters& p,
                                          const Mesh& mesh, const EnergyOptions& opts = {});

enum class DecayModel { Exponential, Polynomial };

[[nodiscard]] const char* to_string(DecayModel m);

struct FitWindow {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

/// Exponential: ln E = intercept + slope t. Polynomial: ln E = intercept + slope ln t.
struct DecayFit {
    DecayModel model = DecayModel::Exponential;
    double slope = 0.0;      ///< lambda (exponential) or exponent p (polynomial)
    double intercept = 0.0;  ///< ln E0 or ln C
    double residual = 0.0;   ///< root-mean-square misfit of ln E
    FitWindow window;
    std::size_t points = 0;
};

/// Least squares of ln E on t over records with t in [t_lo, t_hi]. Needs >= 10 points,
/// all with positive energy (FitError otherwise).
[[nodiscard]] DecayFit fit_exponential(const TimeSeries& series, FitWindow window);
/// Least squares of ln E on ln t. The window must exclude t <= 0.
[[nodiscard]] DecayFit fit_polynomial(const TimeSeries& series, FitWindow window);

struct ModelSelection {
    DecayModel model = DecayModel::Exponential;
    double margin = 0.0;  ///< |residual difference|
};

/// The smaller residual wins; ties go to Exponential.
[[nodiscard]] ModelSelection select_decay_model(const DecayFit& exponential,
                                                const DecayFit& polynomial);

/// [T/2, T] for a run ending at T.
[[nodiscard]] FitWindow default_window(double final_time);

struct ConvergenceRow {
    double courant = 0.0;
    double kappa = 0.0;
    long steps = 0;
    std::optional<double> difference;  ///< max |Phi_l - Phi_{l+1}| at the final time
    std::optional<double> order;       ///< log2(diff_l / diff_{l+1})
};

/// Temporal self-convergence at fixed I: runs the scheme at courant c, c/2, c/4, ...
/// (`levels` runs, >= 3) to the common final time N_0 kappa_0 and measures the observed
/// order from successive differences of Phi. Throws DegenerateError if a difference
/// vanishes.
[[nodiscard]] std::vector<ConvergenceRow> convergence_report(const PhysicalParameters& p,
                                                             const InitialData& d,
                                                             const GridConfig& base, int levels,
                                                             const SchemeOptions& opts = {});

}  // namespace timo

#endif  // TIMO_DIAGNOSTICS_HPP
