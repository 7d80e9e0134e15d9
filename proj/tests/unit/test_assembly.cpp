#include "timo/assembly.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "timo/error.hpp"

using namespace timo;

namespace {

using Dense = std::vector<std::vector<double>>;

void expect_matrix(const BandedMatrix& m, const Dense& expected, double tol, const char* name) {
    ASSERT_EQ(m.size(), expected.size()) << name;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        for (std::size_t j = 0; j < expected.size(); ++j) {
            EXPECT_NEAR(m.at(i, j), expected[i][j], tol) << name << " (" << i + 1 << ", " << j + 1 << ")";
        }
    }
}

// rho1 = 2, every other constant 1, I = 5, c = 1: h = kappa = 0.2.
SchemeMatrices golden_case() {
    PhysicalParameters p;
    p.rho1 = 2.0;
    return assemble(p, GridConfig{5, 1.0, 1.0});
}

}  // namespace

TEST(Coefficients, MuZeroReferenceGrid) {
    const auto c = compute_coefficients(lookup_preset("mu_zero").parameters, GridConfig{});
    EXPECT_NEAR(c.a1, 0.005, 1e-15);
    EXPECT_NEAR(c.b3, 1.0 / 1040.0, 1e-18);
    EXPECT_DOUBLE_EQ(c.r2, 1.0);
}

TEST(Coefficients, UnitParametersWithUnitTimeStep) {
    // I = 4, c = 4: h = 1/4, kappa = 1.
    const auto c = compute_coefficients(PhysicalParameters{}, GridConfig{4, 4.0, 4.0});
    EXPECT_DOUBLE_EQ(c.a1, 16.0);
    EXPECT_DOUBLE_EQ(c.a2, 2.0);
    EXPECT_DOUBLE_EQ(c.b0, 1.0);
    EXPECT_DOUBLE_EQ(c.b1, 16.0);
    EXPECT_DOUBLE_EQ(c.b3, 0.5);
    EXPECT_DOUBLE_EQ(c.b4, 2.0);
    EXPECT_DOUBLE_EQ(c.tau1, 0.5);
    EXPECT_DOUBLE_EQ(c.tau2, 2.0);
    EXPECT_DOUBLE_EQ(c.tau3, 1.0);
    EXPECT_DOUBLE_EQ(c.r1, 0.5);
    EXPECT_DOUBLE_EQ(c.r3, 2.0);
}

TEST(Coefficients, MatchFormulasAndArePositive) {
    const PhysicalParameters p{1.5, 2.5, 0.7, 3.0, 1.1, 0.4, 0.9, 2.2};
    const GridConfig g{13, 2.0, 0.3};
    const double h = 1.0 / 13, kap = 0.3 / 13;
    const auto c = compute_coefficients(p, g);
    EXPECT_DOUBLE_EQ(c.a1, p.k * kap * kap / (h * h));
    EXPECT_DOUBLE_EQ(c.a2, p.k * kap * kap / (2 * h));
    EXPECT_EQ(c.a2, c.b2);
    EXPECT_DOUBLE_EQ(c.b0, p.k * kap * kap);
    EXPECT_DOUBLE_EQ(c.b1, p.b * kap * kap / (h * h));
    EXPECT_DOUBLE_EQ(c.b3, kap / 2);
    EXPECT_DOUBLE_EQ(c.b4, p.delta * kap * kap / (2 * h));
    EXPECT_DOUBLE_EQ(c.tau1, p.rho3 / (2 * kap));
    EXPECT_DOUBLE_EQ(c.tau2, 1 / (2 * h));
    EXPECT_DOUBLE_EQ(c.tau3, p.delta / (4 * kap * h));
    EXPECT_DOUBLE_EQ(c.r1, p.tau / (2 * kap));
    EXPECT_DOUBLE_EQ(c.r2, p.beta);
    EXPECT_DOUBLE_EQ(c.r3, 1 / (2 * h));
    for (double v : {c.a1, c.a2, c.b0, c.b1, c.b2, c.b3, c.b4, c.tau1, c.tau2, c.tau3, c.r1, c.r2, c.r3}) {
        EXPECT_GT(v, 0.0);
    }
}

TEST(Golden, A1) {
    const double s = 1.0 / 6.0;
    expect_matrix(golden_case().A1,
                  {{11.0 / 6, s, 0, 0}, {s, 5.0 / 3, s, 0}, {0, s, 5.0 / 3, s}, {0, 0, s, 11.0 / 6}},
                  1e-14, "A1");
}

TEST(Golden, B1) {
    // a1 = 1: beta1 = (2 + 6)/6, beta2 = (10 - 6)/3, beta3 = (22 - 6)/6.
    const double b1 = 4.0 / 3, b2 = 4.0 / 3, b3 = 8.0 / 3;
    expect_matrix(golden_case().B1,
                  {{b3, b1, 0, 0}, {b1, b2, b1, 0}, {0, b1, b2, b1}, {0, 0, b1, b3}}, 1e-14, "B1");
}

TEST(Golden, C1) {
    // a2 = 0.1: pentadiag(-1/120, -1/12, 0, 1/12, 1/120), truncated at the ends.
    const double f = 1.0 / 120, n = 1.0 / 12;
    expect_matrix(golden_case().C1,
                  {{0, n, f, 0}, {-n, 0, n, f}, {-f, -n, 0, n}, {0, -f, -n, 0}}, 1e-14, "C1");
}

TEST(Golden, D4) {
    const double r = 2.5;
    expect_matrix(golden_case().D4,
                  {{-r, r, 0, 0}, {-r, 0, r, 0}, {0, -r, 0, r}, {0, 0, -r, r}}, 1e-14, "D4");
}

TEST(Golden, D1IsMinusA1) {
    const auto m = golden_case();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(m.D1.at(i, j), -m.A1.at(i, j));
        }
    }
}

TEST(Golden, C2AndF2CornerRows) {
    // I = 7 (six unknowns), unit constants, c = 1: b2 = b4 = kappa^2/(2h) = h/2.
    const auto m = assemble(PhysicalParameters{}, GridConfig{7, 1.0, 1.0});
    const double b = 1.0 / 14.0;
    const double e = b / 12, f = 5 * b / 6, g = 11 * b / 12;
    const Dense expected{{g, -f, -e, 0, 0, 0},  {g, 0, -f, -e, 0, 0},  {e, f, 0, -f, -e, 0},
                         {0, e, f, 0, -f, -e},  {0, 0, e, f, 0, -g},   {0, 0, 0, e, f, -g}};
    expect_matrix(m.C2, expected, 1e-15, "C2");
    expect_matrix(m.F2, expected, 1e-15, "F2");
}

TEST(Golden, PsiMatricesAreUniformTridiagonal) {
    const PhysicalParameters p{1.0, 3.0, 1.0, 2.0, 1.5, 1.0, 1.0, 1.0};
    const GridConfig g{6, 1.0, 0.5};
    const auto c = compute_coefficients(p, g);
    const auto m = assemble(p, g);
    const double a_off = (p.rho2 + c.b3) / 12, a_diag = 5 * (p.rho2 + c.b3) / 6;
    const double b_off = (2 * p.rho2 + 12 * c.b1 - c.b0) / 12;
    const double b_diag = (10 * p.rho2 - 12 * c.b1 - 5 * c.b0) / 6;
    const double d_off = (-p.rho2 + c.b3) / 12, d_diag = 5 * (-p.rho2 + c.b3) / 6;
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_NEAR(m.A2.at(i, i), a_diag, 1e-14);
        EXPECT_NEAR(m.B2.at(i, i), b_diag, 1e-14);
        EXPECT_NEAR(m.D2.at(i, i), d_diag, 1e-14);
        if (i + 1 < 5) {
            EXPECT_NEAR(m.A2.at(i, i + 1), a_off, 1e-14);
            EXPECT_NEAR(m.A2.at(i + 1, i), a_off, 1e-14);
            EXPECT_NEAR(m.B2.at(i, i + 1), b_off, 1e-14);
            EXPECT_NEAR(m.B2.at(i + 1, i), b_off, 1e-14);
            EXPECT_NEAR(m.D2.at(i, i + 1), d_off, 1e-14);
        }
    }
}

TEST(Golden, ThermalMatrices) {
    const PhysicalParameters p{1.0, 1.0, 2.0, 1.0, 1.0, 0.5, 0.7, 3.0};
    const GridConfig g{6, 1.0, 0.5};
    const auto c = compute_coefficients(p, g);
    const auto m = assemble(p, g);
    EXPECT_EQ(m.A3, BandedMatrix::identity_scaled(5, c.tau1));
    EXPECT_EQ(m.B3, m.A3);
    EXPECT_EQ(m.A4, BandedMatrix::identity_scaled(5, c.r1));
    EXPECT_EQ(m.B4, m.A4);
    EXPECT_EQ(m.C4, BandedMatrix::identity_scaled(5, p.beta));
    EXPECT_EQ(m.L3, BandedMatrix::tridiag(5, -c.tau3, 0.0, c.tau3));
    EXPECT_EQ(m.D3, m.L3);
    EXPECT_EQ(m.C3, BandedMatrix::tridiag(5, -c.tau2, 0.0, c.tau2));
}

TEST(Assembly, FullInteriorRowOfC1) {
    SchemeCoefficients c;
    c.rho1 = c.rho2 = c.tau1 = c.r1 = 1.0;
    c.a2 = 1.0;
    const auto m = assemble(c, 6);
    const double row[5] = {-1.0 / 12, -5.0 / 6, 0.0, 5.0 / 6, 1.0 / 12};
    for (int off = -2; off <= 2; ++off) {
        EXPECT_DOUBLE_EQ(m.C1.at(2, static_cast<std::size_t>(2 + off)), row[off + 2]);
    }
}

TEST(Assembly, ConstantStateRowSums) {
    for (int I : {4, 5, 9, 26}) {
        const auto p = lookup_preset("mu_zero").parameters;
        const auto m = assemble(p, GridConfig{I, 1.0, 0.05});
        const std::vector<double> ones(static_cast<std::size_t>(I - 1), 1.0);
        const auto a = band_matvec(m.A1, ones);
        const auto b = band_matvec(m.B1, ones);
        for (std::size_t i = 0; i < ones.size(); ++i) {
            EXPECT_NEAR(a[i], p.rho1, 1e-13) << "I=" << I << " row " << i;
            EXPECT_NEAR(b[i] - a[i], p.rho1, 1e-13) << "I=" << I << " row " << i;
        }
        // Constant phi carries no shear: C2 and (for zero-flux theta) D4, F2 annihilate it.
        for (double v : band_matvec(m.C2, ones)) {
            EXPECT_NEAR(v, 0.0, 1e-15);
        }
        for (double v : band_matvec(m.F2, ones)) {
            EXPECT_NEAR(v, 0.0, 1e-15);
        }
        for (double v : band_matvec(m.D4, ones)) {
            EXPECT_NEAR(v, 0.0, 1e-13);
        }
    }
}

TEST(Assembly, LinearInShearStiffness) {
    PhysicalParameters p = lookup_preset("mu_nonzero").parameters;
    const GridConfig g{9, 1.0, 0.2};
    const auto c1 = compute_coefficients(p, g);
    const auto m1 = assemble(p, g);
    p.k *= 2;
    const auto c2 = compute_coefficients(p, g);
    const auto m2 = assemble(p, g);
    EXPECT_DOUBLE_EQ(c2.a1, 2 * c1.a1);
    EXPECT_DOUBLE_EQ(c2.a2, 2 * c1.a2);
    EXPECT_DOUBLE_EQ(c2.b0, 2 * c1.b0);
    EXPECT_DOUBLE_EQ(c2.b2, 2 * c1.b2);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_DOUBLE_EQ(m2.C1.at(i, j), 2 * m1.C1.at(i, j));
        }
    }
}

TEST(Assembly, EveryMatrixFitsBandAndIsFinite) {
    const auto m = assemble(lookup_preset("mu_zero").parameters, GridConfig{});
    for (const BandedMatrix* x : {&m.A1, &m.B1, &m.C1, &m.D1, &m.A2, &m.B2, &m.C2, &m.D2, &m.F2,
                                  &m.A3, &m.B3, &m.L3, &m.D3, &m.C3, &m.A4, &m.B4, &m.C4, &m.D4}) {
        EXPECT_EQ(x->size(), 25u);
        EXPECT_LE(x->lower_bandwidth(), 2);
        EXPECT_LE(x->upper_bandwidth(), 2);
        EXPECT_TRUE(x->all_finite());
    }
}

TEST(Assembly, TooFewUnknownsIsRejected) {
    SchemeCoefficients c;
    c.rho1 = c.rho2 = c.tau1 = c.r1 = 1.0;
    EXPECT_THROW((void)assemble(c, 2), ConfigError);
    EXPECT_NO_THROW((void)assemble(c, 3));
}

TEST(BandStructure, AssembledMatricesPassEveryCheck) {
    for (auto name : preset_names()) {
        const auto report = verify_band_structure(assemble(lookup_preset(name).parameters, GridConfig{}));
        for (const auto& check : report.checks) {
            EXPECT_TRUE(check.passed) << name << ": " << check.name;
        }
        EXPECT_TRUE(report.all_passed());
    }
}

TEST(BandStructure, CorruptedA1FailsSymmetry) {
    auto m = assemble(lookup_preset("mu_zero").parameters, GridConfig{});
    m.A1.set(3, 4, m.A1.at(3, 4) + 1e-3);
    const auto report = verify_band_structure(m);
    ASSERT_NE(report.find("A1 symmetric"), nullptr);
    EXPECT_FALSE(report.find("A1 symmetric")->passed);
    EXPECT_FALSE(report.all_passed());
}

TEST(BandStructure, L3EqualsD3) {
    const auto report = verify_band_structure(assemble(PhysicalParameters{}, GridConfig{8, 1.0, 0.5}));
    ASSERT_NE(report.find("L3 = D3"), nullptr);
    EXPECT_TRUE(report.find("L3 = D3")->passed);
}

TEST(Dump, RoundTripsEveryEntry) {
    const auto m = golden_case();
    for (const BandedMatrix* x : {&m.A1, &m.B1, &m.C1, &m.D4}) {
        std::ostringstream os;
        x->dump(os);
        std::istringstream in(os.str());
        for (std::size_t i = 0; i < x->size(); ++i) {
            for (std::size_t j = 0; j < x->size(); ++j) {
                double v = 0.0;
                ASSERT_TRUE(in >> v);
                EXPECT_EQ(v, x->at(i, j));
            }
        }
        double extra = 0.0;
        EXPECT_FALSE(in >> extra);
    }
}
