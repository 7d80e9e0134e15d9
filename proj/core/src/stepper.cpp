#include "timo/stepper.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "timo/error.hpp"

namespace timo {
namespace {

std::vector<double> sample_interior(const Profile& f, const Mesh& mesh) {
    std::vector<double> out(mesh.interior_size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f(mesh.nodes[i + 1]);
    }
    return out;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += a * x[i];
    }
}

// Solves (A - D)/2 a = rhs for the acceleration term a = kappa^2 w_tt of a second-order
// equation A w+ = ... + D w-.
std::vector<double> half_difference_solve(const BandedMatrix& a, const BandedMatrix& d,
                                          std::span<const double> rhs, SolveWorkspace& ws) {
    BandedMatrix s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = (i > 0 ? i - 1 : 0); j < std::min(a.size(), i + 2); ++j) {
            s.set(i, j, 0.5 * (a.at(i, j) - d.at(i, j)));
        }
    }
    return tridiagonal_solve(s, rhs, ws);
}

void check_values(std::span<const double> v, const char* field, long next_step, double threshold) {
    for (double x : v) {
        if (!std::isfinite(x) || std::abs(x) > threshold) {
            throw BlowUpError("blow-up in " + std::string(field) + " at step " +
                                  std::to_string(next_step),
                              next_step, field);
        }
    }
}

}  // namespace

FieldLevel FieldLevel::zeros(std::size_t n) {
    return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
            std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
}

InitialData paper_initial_data(const PhysicalParameters& p) {
    using std::numbers::pi;
    const double theta_amp = -2.0 * pi * p.delta / p.rho3;
    const Profile zero = [](double) { return 0.0; };
    InitialData d;
    d.phi0 = d.psi0 = d.theta0 = d.q0 = d.q1 = zero;
    d.phi1 = [](double x) { return std::cos(pi * x); };
    d.psi1 = [](double x) { return std::sin(2.0 * pi * x); };
    d.theta1 = [theta_amp](double x) { return theta_amp * std::cos(2.0 * pi * x); };
    return d;
}

InitialData zero_initial_data() {
    const Profile zero = [](double) { return 0.0; };
    return {zero, zero, zero, zero, zero, zero, zero, zero};
}

void check_boundary_compatibility(const InitialData& d) {
    const std::pair<const char*, const Profile*> fields[] = {
        {"psi0", &d.psi0}, {"psi1", &d.psi1}, {"q0", &d.q0}, {"q1", &d.q1}};
    for (const auto& [name, f] : fields) {
        for (double x : {0.0, 1.0}) {
            const double v = (*f)(x);
            if (!(std::abs(v) <= 1e-12)) {
                throw ConfigError(std::string("initial data ") + name + " must vanish at x = " +
                                  (x == 0.0 ? "0" : "1") + " (got " + std::to_string(v) + ")");
            }
        }
    }
}

SimulationState build_initial_levels(const InitialData& d, const Mesh& mesh,
                                     const SchemeMatrices& m, const SchemeOptions& opts) {
    check_boundary_compatibility(d);
    const double kappa = mesh.kappa;
    const std::size_t n = mesh.interior_size();

    SimulationState s;
    s.prev = {sample_interior(d.phi0, mesh), sample_interior(d.psi0, mesh),
              sample_interior(d.theta0, mesh), sample_interior(d.q0, mesh)};
    const auto phi_v = sample_interior(d.phi1, mesh);
    const auto psi_v = sample_interior(d.psi1, mesh);
    s.curr = s.prev;
    axpy(kappa, phi_v, s.curr.phi);
    axpy(kappa, psi_v, s.curr.psi);

    if (opts.startup == Startup::Taylor1) {
        axpy(kappa, sample_interior(d.theta1, mesh), s.curr.theta);
        axpy(kappa, sample_interior(d.q1, mesh), s.curr.q);
    } else {
        const FieldLevel& z = s.prev;
        SolveWorkspace ws;
        std::vector<double> rhs(n);

        // (A1 - D1)/2 a = (B1 + D1 - A1) phi + C1 psi - kappa (A1 + D1) phi_t
        band_matvec(m.B1, z.phi, rhs);
        band_matvec_add(m.D1, z.phi, rhs);
        band_matvec_add(m.A1, z.phi, rhs, -1.0);
        band_matvec_add(m.C1, z.psi, rhs);
        band_matvec_add(m.A1, phi_v, rhs, -kappa);
        band_matvec_add(m.D1, phi_v, rhs, -kappa);
        axpy(0.5, half_difference_solve(m.A1, m.D1, rhs, ws), s.curr.phi);

        // (A2 - D2)/2 a = (B2 + D2 - A2) psi + C2 phi + F2 theta - kappa (A2 + D2) psi_t
        band_matvec(m.B2, z.psi, rhs);
        band_matvec_add(m.D2, z.psi, rhs);
        band_matvec_add(m.A2, z.psi, rhs, -1.0);
        band_matvec_add(m.C2, z.phi, rhs);
        band_matvec_add(m.F2, z.theta, rhs);
        band_matvec_add(m.A2, psi_v, rhs, -kappa);
        band_matvec_add(m.D2, psi_v, rhs, -kappa);
        axpy(0.5, half_difference_solve(m.A2, m.D2, rhs, ws), s.curr.psi);

        // kappa (A3 + B3) theta_t = (B3 - A3) theta - C3 q + (D3 - L3) psi - kappa (L3 + D3) psi_t
        band_matvec(m.B3, z.theta, rhs);
        band_matvec_add(m.A3, z.theta, rhs, -1.0);
        band_matvec_add(m.C3, z.q, rhs, -1.0);
        band_matvec_add(m.D3, z.psi, rhs);
        band_matvec_add(m.L3, z.psi, rhs, -1.0);
        band_matvec_add(m.L3, psi_v, rhs, -kappa);
        band_matvec_add(m.D3, psi_v, rhs, -kappa);
        for (std::size_t i = 0; i < n; ++i) {
            s.curr.theta[i] += rhs[i] / (m.A3.diag(i, 0) + m.B3.diag(i, 0));
        }

        // kappa (A4 + B4) q_t = (B4 - A4 - C4) q - D4 theta; identical for both flux treatments
        band_matvec(m.B4, z.q, rhs);
        band_matvec_add(m.A4, z.q, rhs, -1.0);
        band_matvec_add(m.C4, z.q, rhs, -1.0);
        band_matvec_add(m.D4, z.theta, rhs, -1.0);
        for (std::size_t i = 0; i < n; ++i) {
            s.curr.q[i] += rhs[i] / (m.A4.diag(i, 0) + m.B4.diag(i, 0));
        }
    }
    s.step = 1;
    s.time = kappa;
    return s;
}

FieldLevel extend_to_boundary(const FieldLevel& interior) {
    auto reflect = [](const std::vector<double>& v) {
        std::vector<double> full(v.size() + 2);
        std::copy(v.begin(), v.end(), full.begin() + 1);
        full.front() = v.empty() ? 0.0 : v.front();
        full.back() = v.empty() ? 0.0 : v.back();
        return full;
    };
    auto pin = [](const std::vector<double>& v) {
        std::vector<double> full(v.size() + 2, 0.0);
        std::copy(v.begin(), v.end(), full.begin() + 1);
        return full;
    };
    return {reflect(interior.phi), pin(interior.psi), reflect(interior.theta), pin(interior.q)};
}

void step(SimulationState& state, const SchemeMatrices& m, double kappa,
          const SchemeOptions& opts, StepWorkspace& ws) {
    const std::size_t n = state.curr.phi.size();
    const FieldLevel& older = state.prev;
    const FieldLevel& cur = state.curr;
    FieldLevel& next = ws.next;
    if (next.phi.size() != n) {
        next = FieldLevel::zeros(n);
    }
    ws.rhs.resize(n);
    auto& rhs = ws.rhs;
    const long next_step = state.step + 1;

    // A1 Phi+ = B1 Phi + C1 Psi + D1 Phi-
    band_matvec(m.B1, cur.phi, rhs);
    band_matvec_add(m.C1, cur.psi, rhs);
    band_matvec_add(m.D1, older.phi, rhs);
    tridiagonal_solve(m.A1, rhs, next.phi, ws.solve);
    check_values(next.phi, "phi", next_step, opts.blowup_threshold);

    // A2 Psi+ = B2 Psi + C2 Phi + D2 Psi- + F2 Theta
    band_matvec(m.B2, cur.psi, rhs);
    band_matvec_add(m.C2, cur.phi, rhs);
    band_matvec_add(m.D2, older.psi, rhs);
    band_matvec_add(m.F2, cur.theta, rhs);
    tridiagonal_solve(m.A2, rhs, next.psi, ws.solve);
    check_values(next.psi, "psi", next_step, opts.blowup_threshold);

    // A3 Theta+ = B3 Theta- - C3 Q + D3 Psi- - L3 Psi+
    band_matvec(m.B3, older.theta, rhs);
    band_matvec_add(m.C3, cur.q, rhs, -1.0);
    band_matvec_add(m.D3, older.psi, rhs);
    band_matvec_add(m.L3, next.psi, rhs, -1.0);
    for (std::size_t i = 0; i < n; ++i) {
        next.theta[i] = rhs[i] / m.A3.diag(i, 0);
    }
    check_values(next.theta, "theta", next_step, opts.blowup_threshold);

    // A4 Q+ = B4 Q- - C4 Q - D4 Theta, or with C4 split evenly onto Q+ and Q-.
    band_matvec(m.D4, cur.theta, rhs);
    if (opts.flux_damping == FluxDamping::Centered) {
        for (std::size_t i = 0; i < n; ++i) {
            next.q[i] = (m.B4.diag(i, 0) * older.q[i] - m.C4.diag(i, 0) * cur.q[i] - rhs[i]) /
                        m.A4.diag(i, 0);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double half_c = 0.5 * m.C4.diag(i, 0);
            next.q[i] = ((m.B4.diag(i, 0) - half_c) * older.q[i] - rhs[i]) /
                        (m.A4.diag(i, 0) + half_c);
        }
    }
    check_values(next.q, "q", next_step, opts.blowup_threshold);

    // Rotate levels: prev <- curr <- next, recycling the old prev buffers as scratch.
    std::swap(state.prev, state.curr);
    std::swap(state.curr, ws.next);
    state.step = next_step;
    state.time = static_cast<double>(next_step) * kappa;
}

SimulationState run(const Mesh& mesh, const SchemeMatrices& m, const InitialData& d,
                    const Observer& observer, const RunOptions& opts) {
    if (opts.stride < 1) {
        throw ConfigError("observer stride must be at least 1");
    }
    SimulationState state = build_initial_levels(d, mesh, m, opts.scheme);
    StepWorkspace ws;
    FieldLevel older;
    while (state.step < mesh.steps) {
        const long n = state.step;
        const bool observe = observer && (n - 1) % opts.stride == 0;
        if (observe) {
            older = state.prev;
        }
        try {
            step(state, m, mesh.kappa, opts.scheme, ws);
        } catch (const BlowUpError& e) {
            throw BlowUpError(std::string(e.what()) + " (t = " +
                                  std::to_string(static_cast<double>(e.step()) * mesh.kappa) + ")",
                              e.step(), e.field());
        } catch (const SingularSolveError& e) {
            throw SingularSolveError(std::string(e.what()) + " while computing step " +
                                         std::to_string(n + 1) + " (t = " +
                                         std::to_string(static_cast<double>(n + 1) * mesh.kappa) +
                                         ")",
                                     e.pivot_index());
        }
        if (observe) {
            observer(StepView{n, static_cast<double>(n) * mesh.kappa, older, state.prev,
                              state.curr});
        }
    }
    return state;
}

SimulationState run(const PhysicalParameters& p, const GridConfig& cfg, const InitialData& d,
                    const Observer& observer, const RunOptions& opts) {
    const Mesh mesh = build_mesh(cfg);
    return run(mesh, assemble(p, cfg), d, observer, opts);
}

}  // namespace timo
