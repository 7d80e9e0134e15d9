#include "timo/stencil.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "timo/banded.hpp"
#include "timo/error.hpp"

namespace timo {
namespace {

// The input must span the unit interval with spacing h.
void check_full(std::span<const double> full, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("grid spacing must be positive");
    }
    if (full.size() < 3 || std::abs(h * static_cast<double>(full.size() - 1) - 1.0) > 1e-9) {
        throw LengthMismatchError("full-node array of length " + std::to_string(full.size()) +
                                  " does not match spacing h = " + std::to_string(h));
    }
}

}  // namespace

std::vector<double> central_first_derivative(std::span<const double> full, double h) {
    check_full(full, h);
    std::vector<double> out(full.size() - 2);
    for (std::size_t i = 1; i + 1 < full.size(); ++i) {
        out[i - 1] = (full[i + 1] - full[i - 1]) / (2.0 * h);
    }
    return out;
}

std::vector<double> delta_x2(std::span<const double> full) {
    if (full.size() < 3) {
        throw LengthMismatchError("delta_x2 needs at least three nodes");
    }
    std::vector<double> out(full.size() - 2);
    for (std::size_t i = 1; i + 1 < full.size(); ++i) {
        out[i - 1] = full[i + 1] - 2.0 * full[i] + full[i - 1];
    }
    return out;
}

std::vector<double> compact_second_derivative(std::span<const double> full, double h,
                                              std::optional<BoundaryClosure> closure) {
    check_full(full, h);
    auto rhs = delta_x2(full);
    for (auto& r : rhs) {
        r /= h * h;
    }
    if (closure) {
        rhs.front() -= closure->left / 12.0;
        rhs.back() -= closure->right / 12.0;
    }
    const auto lhs = BandedMatrix::tridiag(rhs.size(), 1.0 / 12.0, 5.0 / 6.0, 1.0 / 12.0);
    SolveWorkspace ws;
    return tridiagonal_solve(lhs, rhs, ws);
}

double compact_operator_error(const std::function<double(double)>& f,
                              const std::function<double(double)>& second_derivative,
                              int intervals) {
    const double h = 1.0 / intervals;
    std::vector<double> v(static_cast<std::size_t>(intervals) + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f(static_cast<double>(i) * h);
    }
    const auto w = compact_second_derivative(
        v, h, BoundaryClosure{second_derivative(0.0), second_derivative(1.0)});
    double err = 0.0;
    for (int i = 1; i <= intervals - 1; ++i) {
        const double x = static_cast<double>(i) * h;
        err = std::max(err, std::abs(w[static_cast<std::size_t>(i - 1)] - second_derivative(x)));
    }
    return err;
}

std::vector<double> estimate_operator_order(const std::function<double(double)>& f,
                                            const std::function<double(double)>& second_derivative,
                                            std::span<const int> intervals) {
    if (intervals.size() < 2) {
        throw std::invalid_argument("order estimate needs at least two grids");
    }
    for (std::size_t j = 0; j < intervals.size(); ++j) {
        if (intervals[j] < 8) {
            throw std::invalid_argument("order estimate needs I >= 8");
        }
        if (j > 0 && intervals[j] != 2 * intervals[j - 1]) {
            throw std::invalid_argument("successive grids must double I");
        }
    }
    std::vector<double> errors;
    for (int I : intervals) {
        const double e = compact_operator_error(f, second_derivative, I);
        if (!(e >= 1e-15)) {
            throw DegenerateError("operator error " + std::to_string(e) + " at I = " +
                                  std::to_string(I) + " is below 1e-15; order undefined");
        }
        errors.push_back(e);
    }
    std::vector<double> orders;
    for (std::size_t j = 0; j + 1 < errors.size(); ++j) {
        orders.push_back(std::log2(errors[j] / errors[j + 1]));
    }
    return orders;
}

}  // namespace timo
