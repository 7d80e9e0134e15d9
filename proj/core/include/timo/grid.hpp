#ifndef TIMO_GRID_HPP
#define TIMO_GRID_HPP

#include <cstddef>
#include <vector>

#include "timo/params.hpp"

namespace timo {

/// Uniform space-time discretization of (0,1) x (0,T).
///
/// h = 1/I, kappa = c h, N = floor(T / kappa).
struct GridConfig {
    int intervals = 26;       ///< I, number of spatial subintervals (>= 4)
    double final_time = 35.0; ///< T
    double courant = 0.05;    ///< c = kappa / h

    [[nodiscard]] double h() const { return 1.0 / intervals; }
    [[nodiscard]] double kappa() const { return courant * h(); }
    /// Number of time steps N. Tolerates rounding in T/kappa (35 / (0.05/26) is 18200).
    [[nodiscard]] long steps() const;
    /// Number of interior unknowns per field, I - 1.
    [[nodiscard]] std::size_t interior_size() const { return static_cast<std::size_t>(intervals - 1); }

    friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

/// Throws ConfigError if I < 4, T <= 0, c <= 0 or the run would have no step.
void validate(const GridConfig& cfg);

struct Mesh {
    int intervals = 0;
    double h = 0.0;
    double kappa = 0.0;
    long steps = 0;
    std::vector<double> nodes;  ///< x_0 .. x_I
    std::vector<double> times;  ///< t_0 .. t_N

    [[nodiscard]] std::size_t interior_size() const { return nodes.size() - 2; }
};

[[nodiscard]] Mesh build_mesh(const GridConfig& cfg);

struct CourantAdvisory {
    double max_wave_speed = 0.0;  ///< max(sqrt(k/rho1), sqrt(b/rho2), sqrt(1/(tau rho3)))
    double product = 0.0;         ///< c * max_wave_speed
    bool warning = false;         ///< product > 1

};

/// Informational only; nothing in the solver refuses a configuration based on it.
[[nodiscard]] CourantAdvisory courant_advisory(const PhysicalParameters& p, const GridConfig& cfg);

}  // namespace timo

#endif  // TIMO_GRID_HPP
