#include "timo/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "timo/error.hpp"

namespace timo {
namespace {

constexpr std::array<std::string_view, 2> kPresetNames{"mu_zero", "mu_nonzero"};

struct MuTerms {
    double product;
    double coupling;
};

MuTerms mu_terms(const PhysicalParameters& p) {
    const double first = p.tau - p.rho1 / (p.k * p.rho3);
    const double second = p.rho2 / p.b - p.rho1 / p.k;
    const double coupling = p.tau * p.delta * p.delta * p.rho1 / (p.b * p.k * p.rho3);
    return {first * second, coupling};
}

}  // namespace

void validate(const PhysicalParameters& p) {
    const std::array<std::pair<std::string_view, double>, 8> fields{{{"rho1", p.rho1},
                                                                     {"rho2", p.rho2},
                                                                     {"rho3", p.rho3},
                                                                     {"k", p.k},
                                                                     {"b", p.b},
                                                                     {"delta", p.delta},
                                                                     {"beta", p.beta},
                                                                     {"tau", p.tau}}};
    for (const auto& [name, value] : fields) {
        if (!std::isfinite(value) || value <= 0.0) {
            throw ConfigError("parameter '" + std::string(name) +
                              "' must be a finite positive number");
        }
    }
}

double stability_number(const PhysicalParameters& p) {
    const auto terms = mu_terms(p);
    return terms.product - terms.coupling;
}

std::string_view to_string(Regime r) {
    return r == Regime::Zero ? "Zero" : "NonZero";
}

Regime classify_regime(double mu, double tol) {
    if (!(tol > 0.0)) {
        throw ConfigError("regime tolerance must be positive");
    }
    return std::abs(mu) <= tol ? Regime::Zero : Regime::NonZero;
}

double regime_tolerance(const PhysicalParameters& p) {
    const auto terms = mu_terms(p);
    return 1e-9 * std::max({1.0, std::abs(terms.product), std::abs(terms.coupling)});
}

ScenarioPreset lookup_preset(std::string_view name) {
    if (name == "mu_zero") {
        PhysicalParameters p;
        p.k = p.rho1 = p.rho2 = 2.0;
        p.b = p.rho3 = p.beta = 1.0;
        p.delta = std::sqrt(2.0 / 3.0);
        p.tau = 3.0;
        return {"mu_zero", p, "k=rho1=rho2=2, b=rho3=beta=1, delta=sqrt(2/3), tau=3 (mu = 0)"};
    }
    if (name == "mu_nonzero") {
        PhysicalParameters p;
        p.k = p.b = p.rho1 = p.rho2 = 2.0;
        p.rho3 = p.delta = p.beta = p.tau = 1.0;
        return {"mu_nonzero", p, "k=b=rho1=rho2=2, rho3=delta=beta=tau=1 (mu = -1/2)"};
    }
    std::string valid;
    for (auto n : kPresetNames) {
        valid += valid.empty() ? "" : ", ";
        valid += n;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "' (valid: " + valid + ")");
}

std::span<const std::string_view> preset_names() {
    return kPresetNames;
}

}  // namespace timo
