#include "timo/banded.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "timo/error.hpp"

namespace timo {

BandedMatrix::BandedMatrix(std::size_t n) : n_(n) {
    for (auto& band : bands_) {
        band.assign(n, 0.0);
    }
}

BandedMatrix BandedMatrix::identity_scaled(std::size_t n, double s) {
    BandedMatrix m(n);
    std::fill(m.bands_[kMaxBand].begin(), m.bands_[kMaxBand].end(), s);
    return m;
}

BandedMatrix BandedMatrix::tridiag(std::size_t n, double lower, double diag, double upper) {
    return pentadiag(n, {0.0, lower, diag, upper, 0.0});
}

BandedMatrix BandedMatrix::pentadiag(std::size_t n, const std::array<double, 5>& stencil) {
    BandedMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int off = -kMaxBand; off <= kMaxBand; ++off) {
            const auto j = static_cast<long>(i) + off;
            if (j >= 0 && j < static_cast<long>(n)) {
                m.bands_[static_cast<std::size_t>(off + kMaxBand)][i] =
                    stencil[static_cast<std::size_t>(off + kMaxBand)];
            }
        }
    }
    return m;
}

double BandedMatrix::at(std::size_t i, std::size_t j) const {
    const long off = static_cast<long>(j) - static_cast<long>(i);
    if (i >= n_ || j >= n_ || off < -kMaxBand || off > kMaxBand) {
        return 0.0;
    }
    return bands_[static_cast<std::size_t>(off + kMaxBand)][i];
}

void BandedMatrix::set(std::size_t i, std::size_t j, double value) {
    const long off = static_cast<long>(j) - static_cast<long>(i);
    if (i >= n_ || j >= n_) {
        throw std::out_of_range("banded matrix index out of range");
    }
    if (off < -kMaxBand || off > kMaxBand) {
        throw std::out_of_range("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") lies outside bandwidth 2");
    }
    bands_[static_cast<std::size_t>(off + kMaxBand)][i] = value;
}

int BandedMatrix::lower_bandwidth() const {
    for (int off = -kMaxBand; off < 0; ++off) {
        const auto& band = bands_[static_cast<std::size_t>(off + kMaxBand)];
        if (std::any_of(band.begin(), band.end(), [](double v) { return v != 0.0; })) {
            return -off;
        }
    }
    return 0;
}

int BandedMatrix::upper_bandwidth() const {
    for (int off = kMaxBand; off > 0; --off) {
        const auto& band = bands_[static_cast<std::size_t>(off + kMaxBand)];
        if (std::any_of(band.begin(), band.end(), [](double v) { return v != 0.0; })) {
            return off;
        }
    }
    return 0;
}

double BandedMatrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (const auto& band : bands_) {
            row += std::abs(band[i]);
        }
        best = std::max(best, row);
    }
    return best;
}

bool BandedMatrix::all_finite() const {
    return std::all_of(bands_.begin(), bands_.end(), [](const std::vector<double>& band) {
        return std::all_of(band.begin(), band.end(), [](double v) { return std::isfinite(v); });
    });
}

std::vector<std::vector<double>> BandedMatrix::to_dense() const {
    std::vector<std::vector<double>> dense(n_, std::vector<double>(n_, 0.0));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            dense[i][j] = at(i, j);
        }
    }
    return dense;
}

void BandedMatrix::dump(std::ostream& os) const {
    std::array<char, 64> buf{};
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), at(i, j),
                                           std::chars_format::general, 17);
            if (j > 0) {
                os << ' ';
            }
            os.write(buf.data(), end - buf.data());
        }
        os << '\n';
    }
}

namespace {

void check_dims(const BandedMatrix& m, std::size_t a, std::size_t b) {
    if (a != m.size() || b != m.size()) {
        throw LengthMismatchError("matrix of size " + std::to_string(m.size()) +
                                  " applied to vectors of size " + std::to_string(a) + "/" +
                                  std::to_string(b));
    }
}

}  // namespace

void band_matvec(const BandedMatrix& m, std::span<const double> x, std::span<double> out) {
    check_dims(m, x.size(), out.size());
    std::fill(out.begin(), out.end(), 0.0);
    band_matvec_add(m, x, out);
}

std::vector<double> band_matvec(const BandedMatrix& m, std::span<const double> x) {
    std::vector<double> out(x.size());
    band_matvec(m, x, out);
    return out;
}

void band_matvec_add(const BandedMatrix& m, std::span<const double> x, std::span<double> out,
                     double scale) {
    check_dims(m, x.size(), out.size());
    const auto n = static_cast<long>(m.size());
    for (long i = 0; i < n; ++i) {
        double acc = 0.0;
        const long lo = std::max(-static_cast<long>(BandedMatrix::kMaxBand), -i);
        const long hi = std::min(static_cast<long>(BandedMatrix::kMaxBand), n - 1 - i);
        for (long off = lo; off <= hi; ++off) {
            acc += m.diag(static_cast<std::size_t>(i), static_cast<int>(off)) *
                   x[static_cast<std::size_t>(i + off)];
        }
        out[static_cast<std::size_t>(i)] += scale * acc;
    }
}

void tridiagonal_solve(const BandedMatrix& m, std::span<const double> rhs, std::span<double> x,
                       SolveWorkspace& ws) {
    check_dims(m, rhs.size(), x.size());
    if (m.lower_bandwidth() > 1 || m.upper_bandwidth() > 1) {
        throw std::invalid_argument("tridiagonal_solve: matrix bandwidth exceeds 1");
    }
    const std::size_t n = m.size();
    if (n == 0) {
        return;
    }
    ws.reserve(n);
    auto& cp = ws.upper_prime;
    const double tiny = 1e-14 * m.norm_inf();

    double pivot = m.diag(0, 0);
    if (!(std::abs(pivot) > tiny)) {
        throw SingularSolveError("singular tridiagonal system (zero pivot at row 0)", 0);
    }
    double inv = 1.0 / pivot;
    cp[0] = n > 1 ? m.diag(0, 1) * inv : 0.0;
    x[0] = rhs[0] * inv;
    for (std::size_t i = 1; i < n; ++i) {
        const double lower = m.diag(i, -1);
        pivot = m.diag(i, 0) - lower * cp[i - 1];
        if (!(std::abs(pivot) > tiny)) {
            throw SingularSolveError(
                "singular tridiagonal system (zero pivot at row " + std::to_string(i) + ")", i);
        }
        inv = 1.0 / pivot;
        cp[i] = i + 1 < n ? m.diag(i, 1) * inv : 0.0;
        x[i] = (rhs[i] - lower * x[i - 1]) * inv;
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= cp[i] * x[i + 1];
    }
}

std::vector<double> tridiagonal_solve(const BandedMatrix& m, std::span<const double> rhs,
                                      SolveWorkspace& ws) {
    std::vector<double> x(rhs.size());
    tridiagonal_solve(m, rhs, x, ws);
    return x;
}

std::vector<double> dense_solve_oracle(DenseMatrix m, std::vector<double> rhs) {
    const std::size_t n = m.size();
    if (n > 64) {
        throw std::invalid_argument("dense_solve_oracle is limited to n <= 64");
    }
    if (rhs.size() != n ||
        std::any_of(m.begin(), m.end(), [n](const auto& row) { return row.size() != n; })) {
        throw LengthMismatchError("dense_solve_oracle: non-square matrix or rhs size mismatch");
    }
    std::vector<std::size_t> col(n);
    std::iota(col.begin(), col.end(), 0);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k;
        std::size_t pc = k;
        double best = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (std::abs(m[i][j]) > best) {
                    best = std::abs(m[i][j]);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best == 0.0) {
            throw SingularSolveError("singular dense system", k);
        }
        std::swap(m[k], m[pr]);
        std::swap(rhs[k], rhs[pr]);
        if (pc != k) {
            for (auto& row : m) {
                std::swap(row[k], row[pc]);
            }
            std::swap(col[k], col[pc]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m[i][k] / m[k][k];
            if (f == 0.0) {
                continue;
            }
            for (std::size_t j = k; j < n; ++j) {
                m[i][j] -= f * m[k][j];
            }
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<double> y(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= m[i][j] * y[j];
        }
        y[i] = acc / m[i][i];
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[col[i]] = y[i];
    }
    return x;
}

}  // namespace timo
