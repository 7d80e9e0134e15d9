#ifndef TIMO_ASSEMBLY_HPP
#define TIMO_ASSEMBLY_HPP

#include <string>
#include <vector>

#include "timo/banded.hpp"
#include "timo/grid.hpp"
#include "timo/params.hpp"

namespace timo {

/// Scalar coefficients of the fully discrete scheme.
struct SchemeCoefficients {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double a1 = 0.0;    ///< k kappa^2 / h^2
    double a2 = 0.0;    ///< k kappa^2 / (2h)
    double b0 = 0.0;    ///< k kappa^2
    double b1 = 0.0;    ///< b kappa^2 / h^2
    double b2 = 0.0;    ///< equal to a2
    double b3 = 0.0;    ///< kappa / 2
    double b4 = 0.0;    ///< delta kappa^2 / (2h)
    double tau1 = 0.0;  ///< rho3 / (2 kappa)
    double tau2 = 0.0;  ///< 1 / (2h)
    double tau3 = 0.0;  ///< delta / (4 kappa h)
    double r1 = 0.0;    ///< tau / (2 kappa)
    double r2 = 0.0;    ///< beta
    double r3 = 0.0;    ///< 1 / (2h)
};

[[nodiscard]] SchemeCoefficients compute_coefficients(const PhysicalParameters& p,
                                                      const GridConfig& cfg);

/// Matrices of the three-level system, all of size I-1:
///
///   A1 Phi+   = B1 Phi + C1 Psi + D1 Phi-
///   A2 Psi+   = B2 Psi + C2 Phi + D2 Psi- + F2 Theta
///   A3 Theta+ + L3 Psi+ = B3 Theta- - C3 Q + D3 Psi-
///   A4 Q+     = B4 Q- - C4 Q - D4 Theta
struct SchemeMatrices {
    BandedMatrix A1, B1, C1, D1;
    BandedMatrix A2, B2, C2, D2, F2;
    BandedMatrix A3, B3, L3, D3, C3;
    BandedMatrix A4, B4, C4, D4;
};

[[nodiscard]] SchemeMatrices assemble(const PhysicalParameters& p, const GridConfig& cfg);
[[nodiscard]] SchemeMatrices assemble(const SchemeCoefficients& c, std::size_t interior_size);

struct BandCheck {
    std::string name;
    bool passed = false;
};

struct BandReport {
    std::vector<BandCheck> checks;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const BandCheck* find(const std::string& name) const;
};

/// Structural sanity checks on an assembled set: symmetry and bandwidth of A1/A2,
/// identity scaling of A3/B3/A4/B4/C4, antisymmetric stencils of C3/L3/D3, and the
/// pairwise identities D1 = -A1, A3 = B3, A4 = B4, L3 = D3.
[[nodiscard]] BandReport verify_band_structure(const SchemeMatrices& m);

}  // namespace timo

#endif  // TIMO_ASSEMBLY_HPP
