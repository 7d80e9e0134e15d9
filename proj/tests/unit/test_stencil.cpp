#include "timo/stencil.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "timo/banded.hpp"
#include "timo/error.hpp"

using namespace timo;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> sample(int I, const std::function<double(double)>& f) {
    std::vector<double> v(static_cast<std::size_t>(I) + 1);
    for (int i = 0; i <= I; ++i) {
        v[static_cast<std::size_t>(i)] = f(static_cast<double>(i) / I);
    }
    return v;
}

const auto cos_pi = [](double x) { return std::cos(pi * x); };
const auto cos_pi_xx = [](double x) { return -pi * pi * std::cos(pi * x); };

}  // namespace

TEST(CentralDifference, ExactOnQuadratics) {
    const int I = 10;
    const auto v = sample(I, [](double x) { return 3 * x * x - x + 2; });
    const auto d = central_first_derivative(v, 1.0 / I);
    ASSERT_EQ(d.size(), 9u);
    for (int i = 1; i < I; ++i) {
        EXPECT_NEAR(d[static_cast<std::size_t>(i - 1)], 6.0 * i / I - 1.0, 1e-12);
    }
}

TEST(DeltaX2, SecondDifference) {
    const std::vector<double> v{0, 1, 4, 9, 16};
    EXPECT_EQ(delta_x2(v), (std::vector<double>{2, 2, 2}));
}

TEST(CompactOperator, QuadraticWithExactClosureIsExact) {
    for (int I : {4, 9, 26}) {
        const auto v = sample(I, [](double x) { return x * x; });
        const auto w = compact_second_derivative(v, 1.0 / I, BoundaryClosure{2.0, 2.0});
        for (double x : w) {
            EXPECT_NEAR(x, 2.0, 1e-12) << "I=" << I;
        }
    }
}

TEST(CompactOperator, ExactOnRandomCubics) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const auto f = [&](double x) { return a + b * x + c * x * x + d * x * x * x; };
        const auto f2 = [&](double x) { return 2 * c + 6 * d * x; };
        const int I = 12;
        const auto w = compact_second_derivative(sample(I, f), 1.0 / I, BoundaryClosure{f2(0), f2(1)});
        for (int i = 1; i < I; ++i) {
            EXPECT_NEAR(w[static_cast<std::size_t>(i - 1)], f2(static_cast<double>(i) / I), 1e-11);
        }
    }
}

TEST(CompactOperator, IsLinear) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int I = 20;
    std::vector<double> a(I + 1), b(I + 1), mix(I + 1);
    const double alpha = u(rng), beta = u(rng);
    for (int i = 0; i <= I; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
        mix[i] = alpha * a[i] + beta * b[i];
    }
    const double h = 1.0 / I;
    const auto wa = compact_second_derivative(a, h);
    const auto wb = compact_second_derivative(b, h);
    const auto wm = compact_second_derivative(mix, h);
    for (std::size_t i = 0; i < wm.size(); ++i) {
        EXPECT_NEAR(wm[i], alpha * wa[i] + beta * wb[i], 1e-12 * I * I);
    }
}

TEST(CompactOperator, EqualsSecondDifferenceThroughMassInverse) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int I = 15;
    std::vector<double> v(I + 1);
    for (auto& x : v) {
        x = u(rng);
    }
    const double h = 1.0 / I;
    const auto d2 = delta_x2(v);
    SolveWorkspace ws;
    const auto via_mass = tridiagonal_solve(BandedMatrix::tridiag(d2.size(), 1.0 / 12, 5.0 / 6, 1.0 / 12), d2, ws);
    const auto w = compact_second_derivative(v, h);
    for (std::size_t i = 0; i < w.size(); ++i) {
        EXPECT_NEAR(w[i] * h * h, via_mass[i], 1e-13);
    }
}

TEST(CompactOperator, ErrorRatioNearSixteenForCosine) {
    double previous = compact_operator_error(cos_pi, cos_pi_xx, 8);
    for (int I : {16, 32, 64}) {
        const double e = compact_operator_error(cos_pi, cos_pi_xx, I);
        EXPECT_NEAR(previous / e, 16.0, 1.5) << "I=" << I;
        previous = e;
    }
}

TEST(CompactOperator, RejectsLengthNotMatchingSpacing) {
    const std::vector<double> v(11, 1.0);
    EXPECT_THROW((void)compact_second_derivative(v, 0.2), LengthMismatchError);
    EXPECT_THROW((void)central_first_derivative(v, 0.2), LengthMismatchError);
}

TEST(OperatorOrder, CosineIsFourthOrder) {
    const std::vector<int> grids{8, 16, 32, 64};
    const auto orders = estimate_operator_order(cos_pi, cos_pi_xx, grids);
    ASSERT_EQ(orders.size(), 3u);
    for (double p : orders) {
        EXPECT_GE(p, 3.8);
        EXPECT_LE(p, 4.2);
    }
}

TEST(OperatorOrder, SineTwoPiIsFourthOrder) {
    const std::vector<int> grids{16, 32};
    const auto orders = estimate_operator_order(
        [](double x) { return std::sin(2 * pi * x); },
        [](double x) { return -4 * pi * pi * std::sin(2 * pi * x); }, grids);
    ASSERT_EQ(orders.size(), 1u);
    EXPECT_GE(orders[0], 3.8);
    EXPECT_LE(orders[0], 4.2);
}

TEST(OperatorOrder, QuadraticIsDegenerate) {
    const std::vector<int> grids{8, 16};
    EXPECT_THROW((void)estimate_operator_order([](double x) { return x * x; },
                                               [](double) { return 2.0; }, grids),
                 DegenerateError);
}

TEST(OperatorOrder, RejectsBadGridLists) {
    const std::vector<int> small{4, 8};
    const std::vector<int> not_doubling{8, 12};
    const std::vector<int> single{8};
    EXPECT_THROW((void)estimate_operator_order(cos_pi, cos_pi_xx, small), std::invalid_argument);
    EXPECT_THROW((void)estimate_operator_order(cos_pi, cos_pi_xx, not_doubling), std::invalid_argument);
    EXPECT_THROW((void)estimate_operator_order(cos_pi, cos_pi_xx, single), std::invalid_argument);
}
