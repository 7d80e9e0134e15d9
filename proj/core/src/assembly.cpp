#include "timo/assembly.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "timo/error.hpp"

namespace timo {
namespace {

// How a stencil treats references past the boundary nodes.
enum class Edge {
    Truncate,  // field vanishes at the boundary (psi, q): out-of-range references dropped
    Reflect,   // ghost rule w_{-1} = w_0 = w_1 (phi, theta): references folded onto the end node
};

// Interior row r corresponds to node i = r + 1; the stencil is indexed by offset -2..+2.
BandedMatrix stencil_matrix(std::size_t n, const std::array<double, 5>& stencil, Edge edge) {
    BandedMatrix m(n);
    const auto last = static_cast<long>(n);
    for (long i = 1; i <= last; ++i) {
        for (long off = -2; off <= 2; ++off) {
            const double s = stencil[static_cast<std::size_t>(off + 2)];
            if (s == 0.0) {
                continue;
            }
            long j = i + off;
            if (j < 1 || j > last) {
                if (edge == Edge::Truncate) {
                    continue;
                }
                j = std::clamp(j, 1L, last);
            }
            const auto r = static_cast<std::size_t>(i - 1);
            const auto c = static_cast<std::size_t>(j - 1);
            m.set(r, c, m.at(r, c) + s);
        }
    }
    return m;
}

std::array<double, 5> scaled(const std::array<double, 5>& s, double f) {
    std::array<double, 5> out{};
    std::transform(s.begin(), s.end(), out.begin(), [f](double v) { return v * f; });
    return out;
}

// (1 + delta_x^2 / 12) and its product with the central first difference.
constexpr std::array<double, 5> kCompactMass{0.0, 1.0 / 12.0, 5.0 / 6.0, 1.0 / 12.0, 0.0};
constexpr std::array<double, 5> kCompactGradient{-1.0 / 12.0, -5.0 / 6.0, 0.0, 5.0 / 6.0,
                                                 1.0 / 12.0};

bool is_identity_scaled(const BandedMatrix& m) {
    if (m.lower_bandwidth() != 0 || m.upper_bandwidth() != 0 || m.size() == 0) {
        return false;
    }
    const double s = m.diag(0, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.diag(i, 0) != s) {
            return false;
        }
    }
    return true;
}

bool is_symmetric(const BandedMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < std::min(m.size(), i + 3); ++j) {
            if (m.at(i, j) != m.at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

// tridiag(-s, 0, s) with a single s throughout.
bool is_antisymmetric_stencil(const BandedMatrix& m) {
    if (m.lower_bandwidth() > 1 || m.upper_bandwidth() > 1 || m.size() < 2) {
        return false;
    }
    const double s = m.diag(0, 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.diag(i, 0) != 0.0) {
            return false;
        }
        if (i + 1 < m.size() && (m.diag(i, 1) != s || m.diag(i + 1, -1) != -s)) {
            return false;
        }
    }
    return true;
}

bool is_negation(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int off = -2; off <= 2; ++off) {
            if (a.diag(i, off) != -b.diag(i, off)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

SchemeCoefficients compute_coefficients(const PhysicalParameters& p, const GridConfig& cfg) {
    validate(p);
    validate(cfg);
    const double h = cfg.h();
    const double kappa = cfg.kappa();
    const double kappa2 = kappa * kappa;

    SchemeCoefficients c;
    c.rho1 = p.rho1;
    c.rho2 = p.rho2;
    c.a1 = p.k * kappa2 / (h * h);
    c.a2 = p.k * kappa2 / (2.0 * h);
    c.b0 = p.k * kappa2;
    c.b1 = p.b * kappa2 / (h * h);
    c.b2 = c.a2;
    c.b3 = kappa / 2.0;
    c.b4 = p.delta * kappa2 / (2.0 * h);
    c.tau1 = p.rho3 / (2.0 * kappa);
    c.tau2 = 1.0 / (2.0 * h);
    c.tau3 = p.delta / (4.0 * kappa * h);
    c.r1 = p.tau / (2.0 * kappa);
    c.r2 = p.beta;
    c.r3 = 1.0 / (2.0 * h);
    return c;
}

SchemeMatrices assemble(const SchemeCoefficients& c, std::size_t n) {
    if (n < 3) {
        throw ConfigError("assembly needs at least 3 interior unknowns (I >= 4)");
    }
    SchemeMatrices m;

    const double beta1 = (c.rho1 + 6.0 * c.a1) / 6.0;
    const double beta2 = (5.0 * c.rho1 - 6.0 * c.a1) / 3.0;
    m.A1 = stencil_matrix(n, scaled(kCompactMass, c.rho1), Edge::Reflect);
    m.B1 = stencil_matrix(n, {0.0, beta1, beta2, beta1, 0.0}, Edge::Reflect);
    m.C1 = stencil_matrix(n, scaled(kCompactGradient, c.a2), Edge::Truncate);
    m.D1 = stencil_matrix(n, scaled(kCompactMass, -c.rho1), Edge::Reflect);

    const double b2_off = (2.0 * c.rho2 + 12.0 * c.b1 - c.b0) / 12.0;
    const double b2_diag = (10.0 * c.rho2 - 12.0 * c.b1 - 5.0 * c.b0) / 6.0;
    m.A2 = stencil_matrix(n, scaled(kCompactMass, c.rho2 + c.b3), Edge::Truncate);
    m.B2 = stencil_matrix(n, {0.0, b2_off, b2_diag, b2_off, 0.0}, Edge::Truncate);
    m.D2 = stencil_matrix(n, scaled(kCompactMass, -c.rho2 + c.b3), Edge::Truncate);
    // C2 and F2 act on phi and theta, so their corner rows carry the folded ghost values.
    m.C2 = stencil_matrix(n, scaled(kCompactGradient, -c.b2), Edge::Reflect);
    m.F2 = stencil_matrix(n, scaled(kCompactGradient, -c.b4), Edge::Reflect);

    m.A3 = BandedMatrix::identity_scaled(n, c.tau1);
    m.B3 = m.A3;
    m.L3 = stencil_matrix(n, {0.0, -c.tau3, 0.0, c.tau3, 0.0}, Edge::Truncate);
    m.D3 = m.L3;
    m.C3 = stencil_matrix(n, {0.0, -c.tau2, 0.0, c.tau2, 0.0}, Edge::Truncate);

    m.A4 = BandedMatrix::identity_scaled(n, c.r1);
    m.B4 = m.A4;
    m.C4 = BandedMatrix::identity_scaled(n, c.r2);
    m.D4 = stencil_matrix(n, {0.0, -c.r3, 0.0, c.r3, 0.0}, Edge::Reflect);
    return m;
}

SchemeMatrices assemble(const PhysicalParameters& p, const GridConfig& cfg) {
    return assemble(compute_coefficients(p, cfg), cfg.interior_size());
}

bool BandReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const BandCheck& c) { return c.passed; });
}

const BandCheck* BandReport::find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const BandCheck& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

BandReport verify_band_structure(const SchemeMatrices& m) {
    BandReport r;
    auto add = [&r](std::string name, bool ok) { r.checks.push_back({std::move(name), ok}); };

    add("A1 symmetric", is_symmetric(m.A1));
    add("A2 symmetric", is_symmetric(m.A2));
    add("A1 tridiagonal", m.A1.lower_bandwidth() <= 1 && m.A1.upper_bandwidth() <= 1);
    add("A2 tridiagonal", m.A2.lower_bandwidth() <= 1 && m.A2.upper_bandwidth() <= 1);
    add("A3 identity-scaled", is_identity_scaled(m.A3));
    add("B3 identity-scaled", is_identity_scaled(m.B3));
    add("A4 identity-scaled", is_identity_scaled(m.A4));
    add("B4 identity-scaled", is_identity_scaled(m.B4));
    add("C4 identity-scaled", is_identity_scaled(m.C4));
    add("C3 antisymmetric", is_antisymmetric_stencil(m.C3));
    add("L3 antisymmetric", is_antisymmetric_stencil(m.L3));
    add("D3 antisymmetric", is_antisymmetric_stencil(m.D3));
    add("D1 = -A1", is_negation(m.D1, m.A1));
    add("A3 = B3", m.A3 == m.B3);
    add("A4 = B4", m.A4 == m.B4);
    add("L3 = D3", m.L3 == m.D3);

    const std::array<const BandedMatrix*, 18> all{&m.A1, &m.B1, &m.C1, &m.D1, &m.A2, &m.B2,
                                                  &m.C2, &m.D2, &m.F2, &m.A3, &m.B3, &m.L3,
                                                  &m.D3, &m.C3, &m.A4, &m.B4, &m.C4, &m.D4};
    add("all finite", std::all_of(all.begin(), all.end(),
                                  [](const BandedMatrix* b) { return b->all_finite(); }));
    return r;
}

}  // namespace timo
