#include "timo/grid.hpp"

#include <algorithm>
#include <cmath>

#include "timo/error.hpp"

namespace timo {

long GridConfig::steps() const {
    return static_cast<long>(std::floor(final_time / kappa() + 1e-9));
}

void validate(const GridConfig& cfg) {
    if (cfg.intervals < 4) {
        throw ConfigError("I must be at least 4 (got " + std::to_string(cfg.intervals) + ")");
    }
    if (!std::isfinite(cfg.final_time) || cfg.final_time <= 0.0) {
        throw ConfigError("T must be a finite positive number");
    }
    if (!std::isfinite(cfg.courant) || cfg.courant <= 0.0) {
        throw ConfigError("c must be a finite positive number");
    }
    if (cfg.steps() < 1) {
        throw ConfigError("T is shorter than one time step (kappa = c/I)");
    }
}

Mesh build_mesh(const GridConfig& cfg) {
    validate(cfg);
    Mesh mesh;
    mesh.intervals = cfg.intervals;
    mesh.h = cfg.h();
    mesh.kappa = cfg.kappa();
    mesh.steps = cfg.steps();

    mesh.nodes.resize(static_cast<std::size_t>(cfg.intervals) + 1);
    for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
        mesh.nodes[i] = static_cast<double>(i) / cfg.intervals;
    }
    mesh.times.resize(static_cast<std::size_t>(mesh.steps) + 1);
    for (std::size_t n = 0; n < mesh.times.size(); ++n) {
        mesh.times[n] = static_cast<double>(n) * mesh.kappa;
    }
    return mesh;
}

CourantAdvisory courant_advisory(const PhysicalParameters& p, const GridConfig& cfg) {
    CourantAdvisory adv;
    adv.max_wave_speed = std::max({std::sqrt(p.k / p.rho1), std::sqrt(p.b / p.rho2),
                                   std::sqrt(1.0 / (p.tau * p.rho3))});
    adv.product = cfg.courant * adv.max_wave_speed;
    adv.warning = adv.product > 1.0;
    return adv;
}

}  // namespace timo
