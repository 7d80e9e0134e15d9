#include "timo/params.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "timo/error.hpp"

using namespace timo;

namespace {

// Expanded form of the stability number, algebraically equal to the factored one.
double mu_expanded(const PhysicalParameters& p) {
    return p.tau * p.rho2 / p.b - p.tau * p.rho1 / p.k - p.rho1 * p.rho2 / (p.k * p.rho3 * p.b) +
           p.rho1 * p.rho1 / (p.k * p.k * p.rho3) -
           p.tau * p.delta * p.delta * p.rho1 / (p.b * p.k * p.rho3);
}

}  // namespace

TEST(StabilityNumber, MuZeroPresetVanishes) {
    const double mu = stability_number(lookup_preset("mu_zero").parameters);
    EXPECT_LE(std::abs(mu), 1e-12);
}

TEST(StabilityNumber, MuNonzeroPresetIsMinusHalf) {
    EXPECT_NEAR(stability_number(lookup_preset("mu_nonzero").parameters), -0.5, 1e-12);
}

TEST(StabilityNumber, UnitParametersGiveMinusOne) {
    EXPECT_DOUBLE_EQ(stability_number(PhysicalParameters{}), -1.0);
}

TEST(StabilityNumber, MatchesExpandedFormOnRandomParameters) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    for (int trial = 0; trial < 500; ++trial) {
        const PhysicalParameters p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const double a = stability_number(p);
        const double b = mu_expanded(p);
        EXPECT_NEAR(a, b, 1e-11 * std::max(1.0, std::abs(b)));
    }
}

TEST(StabilityNumber, InvariantUnderCommonScalingOfInertiaStiffnessAndCouplingSquared) {
    // rho1, rho2, k, b and delta^2 scaled together leave every ratio in mu unchanged.
    const PhysicalParameters p = lookup_preset("mu_nonzero").parameters;
    PhysicalParameters q = p;
    q.rho1 *= 3;
    q.rho2 *= 3;
    q.k *= 3;
    q.b *= 3;
    q.delta *= std::sqrt(3.0);
    EXPECT_NEAR(stability_number(q), stability_number(p), 1e-14);
}

TEST(Regime, ClassifiesAgainstTolerance) {
    EXPECT_EQ(classify_regime(0.0, 1e-9), Regime::Zero);
    EXPECT_EQ(classify_regime(1e-9, 1e-9), Regime::Zero);
    EXPECT_EQ(classify_regime(-2e-9, 1e-9), Regime::NonZero);
    EXPECT_EQ(classify_regime(-0.5, 1e-9), Regime::NonZero);
}

TEST(Regime, RejectsNonPositiveTolerance) {
    EXPECT_THROW((void)classify_regime(0.0, 0.0), ConfigError);
    EXPECT_THROW((void)classify_regime(0.0, -1.0), ConfigError);
}

TEST(Regime, PresetsClassifyAsNamed) {
    for (auto name : {"mu_zero", "mu_nonzero"}) {
        const auto p = lookup_preset(name).parameters;
        const Regime r = classify_regime(stability_number(p), regime_tolerance(p));
        EXPECT_EQ(r, std::string(name) == "mu_zero" ? Regime::Zero : Regime::NonZero) << name;
    }
}

TEST(Regime, ToleranceNeverBelowFloor) {
    EXPECT_GE(regime_tolerance(PhysicalParameters{}), 1e-9);
    PhysicalParameters big;
    big.tau = 1e6;
    EXPECT_GT(regime_tolerance(big), 1e-9);
}

TEST(Regime, NamesRender) {
    EXPECT_EQ(to_string(Regime::Zero), "Zero");
    EXPECT_EQ(to_string(Regime::NonZero), "NonZero");
}

TEST(Validate, AcceptsPresets) {
    for (auto name : preset_names()) {
        EXPECT_NO_THROW(validate(lookup_preset(name).parameters)) << name;
    }
}

TEST(Validate, RejectsNonPositiveFieldByName) {
    PhysicalParameters p;
    p.rho2 = 0.0;
    try {
        validate(p);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("rho2"), std::string::npos) << e.what();
    }
}

TEST(Validate, RejectsNonFinite) {
    PhysicalParameters p;
    p.tau = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(validate(p), ConfigError);
    p.tau = std::numeric_limits<double>::infinity();
    EXPECT_THROW(validate(p), ConfigError);
    p.tau = -1.0;
    EXPECT_THROW(validate(p), ConfigError);
}

TEST(Presets, MuZeroConstants) {
    const auto p = lookup_preset("mu_zero").parameters;
    EXPECT_EQ(p.k, 2.0);
    EXPECT_EQ(p.rho1, 2.0);
    EXPECT_EQ(p.rho2, 2.0);
    EXPECT_EQ(p.b, 1.0);
    EXPECT_EQ(p.rho3, 1.0);
    EXPECT_EQ(p.beta, 1.0);
    EXPECT_DOUBLE_EQ(p.delta, std::sqrt(2.0 / 3.0));
    EXPECT_EQ(p.tau, 3.0);
}

TEST(Presets, MuNonzeroConstants) {
    const auto p = lookup_preset("mu_nonzero").parameters;
    EXPECT_EQ(p.k, 2.0);
    EXPECT_EQ(p.b, 2.0);
    EXPECT_EQ(p.rho1, 2.0);
    EXPECT_EQ(p.rho2, 2.0);
    EXPECT_EQ(p.rho3, 1.0);
    EXPECT_EQ(p.delta, 1.0);
    EXPECT_EQ(p.beta, 1.0);
    EXPECT_EQ(p.tau, 1.0);
}

TEST(Presets, UnknownNameListsValidOnes) {
    try {
        (void)lookup_preset("mu_half");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("mu_zero"), std::string::npos) << msg;
        EXPECT_NE(msg.find("mu_nonzero"), std::string::npos) << msg;
    }
}

TEST(Regime, WithinToleranceIsZero) {
    EXPECT_EQ(classify_regime(5e-11, 1e-10), Regime::Zero);
    EXPECT_EQ(classify_regime(-0.5, 1e-10), Regime::NonZero);
}

TEST(StabilityNumber, ContinuousInEachParameter) {
    const PhysicalParameters base = lookup_preset("mu_nonzero").parameters;
    const double mu = stability_number(base);
    double PhysicalParameters::*fields[] = {&PhysicalParameters::rho1, &PhysicalParameters::rho2,
                                            &PhysicalParameters::rho3, &PhysicalParameters::k,
                                            &PhysicalParameters::b,    &PhysicalParameters::delta,
                                            &PhysicalParameters::beta, &PhysicalParameters::tau};
    for (auto f : fields) {
        PhysicalParameters p = base;
        p.*f += 1e-8;
        EXPECT_LT(std::abs(stability_number(p) - mu), 1e-6);
    }
}

TEST(StabilityNumber, DoublingRho1AndKKeepsRatioTerms) {
    // rho1 and k enter mu only through the ratio rho1/k.
    const PhysicalParameters p{1.3, 0.7, 2.1, 1.9, 0.6, 0.8, 1.1, 2.5};
    PhysicalParameters q = p;
    q.rho1 *= 2;
    q.k *= 2;
    EXPECT_NEAR(stability_number(q), stability_number(p), 1e-14);
}
