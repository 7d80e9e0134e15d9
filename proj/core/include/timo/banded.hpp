#ifndef TIMO_BANDED_HPP
#define TIMO_BANDED_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace timo {

/// Square matrix with nonzeros confined to diagonal offsets -2..+2.
///
/// Diagonal `d` (offset j - i) is stored as a vector of length n indexed by the row;
/// entries whose column falls outside [0, n) are kept at zero and never read.
class BandedMatrix {
public:
    static constexpr int kMaxBand = 2;

    BandedMatrix() = default;
    explicit BandedMatrix(std::size_t n);

    static BandedMatrix identity_scaled(std::size_t n, double s);
    static BandedMatrix tridiag(std::size_t n, double lower, double diag, double upper);
    /// Offsets -2, -1, 0, +1, +2 in order; entries falling outside the matrix are dropped.
    static BandedMatrix pentadiag(std::size_t n, const std::array<double, 5>& stencil);

    [[nodiscard]] std::size_t size() const { return n_; }

    /// Zero for any (i, j) outside the band.
    [[nodiscard]] double at(std::size_t i, std::size_t j) const;
    /// Throws std::out_of_range if |i - j| > 2 or either index is outside the matrix.
    void set(std::size_t i, std::size_t j, double value);

    [[nodiscard]] double diag(std::size_t i, int offset) const {
        return bands_[static_cast<std::size_t>(offset + kMaxBand)][i];
    }

    /// Widest offset carrying a nonzero entry below / above the main diagonal.
    [[nodiscard]] int lower_bandwidth() const;
    [[nodiscard]] int upper_bandwidth() const;

    /// Max absolute row sum.
    [[nodiscard]] double norm_inf() const;
    [[nodiscard]] bool all_finite() const;

    [[nodiscard]] std::vector<std::vector<double>> to_dense() const;
    /// Row-major dense grid, 17 significant digits, one row per line.
    void dump(std::ostream& os) const;

    friend bool operator==(const BandedMatrix&, const BandedMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::array<std::vector<double>, 2 * kMaxBand + 1> bands_;
};

/// out = m * x.
void band_matvec(const BandedMatrix& m, std::span<const double> x, std::span<double> out);
[[nodiscard]] std::vector<double> band_matvec(const BandedMatrix& m, std::span<const double> x);
/// out += scale * m * x.
void band_matvec_add(const BandedMatrix& m, std::span<const double> x, std::span<double> out,
                     double scale = 1.0);

/// Scratch storage for tridiagonal_solve, reusable across calls of the same size.
struct SolveWorkspace {
    std::vector<double> upper_prime;

    void reserve(std::size_t n) { upper_prime.resize(n); }
};

/// Thomas elimination without pivoting. `m` must have bandwidth <= 1.
/// Throws SingularSolveError when a pivot falls below 1e-14 * ||m||_inf.
void tridiagonal_solve(const BandedMatrix& m, std::span<const double> rhs, std::span<double> x,
                       SolveWorkspace& ws);
[[nodiscard]] std::vector<double> tridiagonal_solve(const BandedMatrix& m,
                                                    std::span<const double> rhs,
                                                    SolveWorkspace& ws);

using DenseMatrix = std::vector<std::vector<double>>;

/// Gaussian elimination with full pivoting, for cross-checking the banded paths in tests.
/// Limited to n <= 64.
[[nodiscard]] std::vector<double> dense_solve_oracle(DenseMatrix m, std::vector<double> rhs);

}  // namespace timo

#endif  // TIMO_BANDED_HPP
