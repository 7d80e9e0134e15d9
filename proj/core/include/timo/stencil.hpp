#ifndef TIMO_STENCIL_HPP
#define TIMO_STENCIL_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace timo {

// Standalone spatial difference operators on the unit interval. Inputs are sampled at
// the I+1 full nodes x_i = i h (h = 1/I); outputs live on the I-1 interior nodes.

/// (v_{i+1} - v_{i-1}) / (2h).
[[nodiscard]] std::vector<double> central_first_derivative(std::span<const double> full, double h);

/// v_{i+1} - 2 v_i + v_{i-1}.
[[nodiscard]] std::vector<double> delta_x2(std::span<const double> full);

/// Values of the compact second derivative w at x = 0 and x = 1.
struct BoundaryClosure {
    double left = 0.0;
    double right = 0.0;
};

/// Fourth-order compact second derivative: solves
///
///   (1/12) w_{i-1} + (5/6) w_i + (1/12) w_{i+1} = (v_{i+1} - 2 v_i + v_{i-1}) / h^2
///
/// on the interior. With a closure, w_0 and w_I take the supplied values; without one the
/// out-of-range neighbours are dropped from the first and last rows.
[[nodiscard]] std::vector<double> compact_second_derivative(
    std::span<const double> full, double h, std::optional<BoundaryClosure> closure = std::nullopt);

/// Observed order log2(err(I)/err(2I)) of compact_second_derivative for each consecutive
/// pair in `intervals`, with errors in the max norm over nodes 1..I-1 and the exact second
/// derivative supplied as the boundary closure. Each I must be >= 8 and double its
/// predecessor. Throws DegenerateError when an error falls below 1e-15.
[[nodiscard]] std::vector<double> estimate_operator_order(
    const std::function<double(double)>& f, const std::function<double(double)>& second_derivative,
    std::span<const int> intervals);

/// Max-norm interior error (nodes 1..I-1) of compact_second_derivative on one grid.
[[nodiscard]] double compact_operator_error(const std::function<double(double)>& f,
                                            const std::function<double(double)>& second_derivative,
                                            int intervals);

}  // namespace timo

#endif  // TIMO_STENCIL_HPP
