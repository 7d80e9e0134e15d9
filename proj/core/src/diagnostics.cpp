#include "timo/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "timo/error.hpp"

namespace timo {
namespace {

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double energy_from(const FieldLevel& cur, std::vector<double> phi_t, std::span<const double> psi_t,
                   const PhysicalParameters& p, const Mesh& mesh, const EnergyOptions& opts) {
    const std::size_t n = cur.phi.size();
    if (n != mesh.interior_size() || phi_t.size() != n || psi_t.size() != n) {
        throw LengthMismatchError("energy: level size does not match the mesh");
    }
    if (opts.exclude_rigid_translation && n > 0) {
        const double mean = std::accumulate(phi_t.begin(), phi_t.end(), 0.0) / static_cast<double>(n);
        for (auto& v : phi_t) {
            v -= mean;
        }
    }
    const double h = mesh.h;
    double nodal = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        nodal += p.rho1 * phi_t[i] * phi_t[i] + p.rho2 * psi_t[i] * psi_t[i] +
                 p.rho3 * cur.theta[i] * cur.theta[i] + p.tau * cur.q[i] * cur.q[i];
    }
    const FieldLevel full = extend_to_boundary(cur);
    double cells = 0.0;
    for (std::size_t i = 0; i + 1 < full.phi.size(); ++i) {
        const double dpsi = (full.psi[i + 1] - full.psi[i]) / h;
        const double dphi = (full.phi[i + 1] - full.phi[i]) / h;
        const double psi_mid = 0.5 * (full.psi[i + 1] + full.psi[i]);
        const double shear = dphi + psi_mid;
        cells += p.b * dpsi * dpsi + p.k * shear * shear;
    }
    return 0.5 * h * (nodal + cells);
}

double sq_sum_residual(std::span<const double> x, std::span<const double> y, double slope,
                       double intercept) {
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        ss += r * r;
    }
    return ss;
}

DecayFit fit_log_linear(const TimeSeries& series, FitWindow window, DecayModel model) {
    if (!(window.t_hi > window.t_lo)) {
        throw FitError("fit window must have t_hi > t_lo");
    }
    if (model == DecayModel::Polynomial && !(window.t_lo > 0.0)) {
        throw FitError("polynomial fit window must exclude t <= 0");
    }
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& r : series) {
        if (r.t < window.t_lo || r.t > window.t_hi) {
            continue;
        }
        if (!(r.energy > 0.0)) {
            throw FitError("non-positive energy at t = " + std::to_string(r.t));
        }
        x.push_back(model == DecayModel::Exponential ? r.t : std::log(r.t));
        y.push_back(std::log(r.energy));
    }
    if (x.size() < 10) {
        throw FitError("decay fit needs at least 10 points in the window (got " +
                       std::to_string(x.size()) + ")");
    }
    const double m = static_cast<double>(x.size());
    const double xm = std::accumulate(x.begin(), x.end(), 0.0) / m;
    const double ym = std::accumulate(y.begin(), y.end(), 0.0) / m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
    }
    DecayFit fit;
    fit.model = model;
    fit.slope = sxy / sxx;
    fit.intercept = ym - fit.slope * xm;
    fit.residual = std::sqrt(sq_sum_residual(x, y, fit.slope, fit.intercept) / m);
    fit.window = window;
    fit.points = x.size();
    return fit;
}

}  // namespace

double discrete_energy(const FieldLevel& older, const FieldLevel& current, const FieldLevel& newer,
                       const PhysicalParameters& p, const Mesh& mesh, const EnergyOptions& opts) {
    const std::size_t n = current.phi.size();
    std::vector<double> phi_t(n);
    std::vector<double> psi_t(n);
    for (std::size_t i = 0; i < n; ++i) {
        phi_t[i] = (newer.phi[i] - older.phi[i]) / (2.0 * mesh.kappa);
        psi_t[i] = (newer.psi[i] - older.psi[i]) / (2.0 * mesh.kappa);
    }
    return energy_from(current, std::move(phi_t), psi_t, p, mesh, opts);
}

double energy_with_velocities(const FieldLevel& current, std::span<const double> phi_t,
                              std::span<const double> psi_t, const PhysicalParameters& p,
                              const Mesh& mesh, const EnergyOptions& opts) {
    return energy_from(current, std::vector<double>(phi_t.begin(), phi_t.end()), psi_t, p, mesh,
                       opts);
}

double max_displacement(const FieldLevel& interior) {
    // The extension only repeats the end values, so the interior maximum already covers it.
    return max_abs(interior.phi);
}

SeriesRecord make_record(const StepView& view, const PhysicalParameters& p, const Mesh& mesh,
                         const EnergyOptions& opts) {
    SeriesRecord r;
    r.n = view.n;
    r.t = view.t;
    r.energy = discrete_energy(view.older, view.current, view.newer, p, mesh, opts);
    r.max_abs_phi = max_displacement(view.current);
    r.max_abs_psi = max_abs(view.current.psi);
    r.max_abs_theta = max_abs(view.current.theta);
    r.max_abs_q = max_abs(view.current.q);
    return r;
}

SeriesRecord initial_record(const InitialData& d, const PhysicalParameters& p, const Mesh& mesh,
                            const EnergyOptions& opts) {
    const std::size_t n = mesh.interior_size();
    FieldLevel level = FieldLevel::zeros(n);
    std::vector<double> phi_t(n);
    std::vector<double> psi_t(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = mesh.nodes[i + 1];
        level.phi[i] = d.phi0(x);
        level.psi[i] = d.psi0(x);
        level.theta[i] = d.theta0(x);
        level.q[i] = d.q0(x);
        phi_t[i] = d.phi1(x);
        psi_t[i] = d.psi1(x);
    }
    SeriesRecord r;
    r.energy = energy_with_velocities(level, phi_t, psi_t, p, mesh, opts);
    r.max_abs_phi = max_displacement(level);
    r.max_abs_psi = max_abs(level.psi);
    r.max_abs_theta = max_abs(level.theta);
    r.max_abs_q = max_abs(level.q);
    return r;
}

const char* to_string(DecayModel m) {
    return m == DecayModel::Exponential ? "Exponential" : "Polynomial";
}

DecayFit fit_exponential(const TimeSeries& series, FitWindow window) {
    return fit_log_linear(series, window, DecayModel::Exponential);
}

DecayFit fit_polynomial(const TimeSeries& series, FitWindow window) {
    return fit_log_linear(series, window, DecayModel::Polynomial);
}

ModelSelection select_decay_model(const DecayFit& exponential, const DecayFit& polynomial) {
    ModelSelection s;
    s.model = polynomial.residual < exponential.residual ? DecayModel::Polynomial
                                                         : DecayModel::Exponential;
    s.margin = std::abs(exponential.residual - polynomial.residual);
    return s;
}

FitWindow default_window(double final_time) {
    return {0.5 * final_time, final_time};
}

std::vector<ConvergenceRow> convergence_report(const PhysicalParameters& p, const InitialData& d,
                                               const GridConfig& base, int levels,
                                               const SchemeOptions& opts) {
    if (levels < 3) {
        throw std::invalid_argument("temporal convergence needs at least 3 levels");
    }
    validate(base);
    const double t_end = static_cast<double>(base.steps()) * base.kappa();

    std::vector<ConvergenceRow> rows;
    std::vector<std::vector<double>> finals;
    for (int l = 0; l < levels; ++l) {
        GridConfig cfg = base;
        cfg.courant = base.courant / static_cast<double>(1L << l);
        cfg.final_time = t_end;
        RunOptions ro;
        ro.scheme = opts;
        const auto state = run(p, cfg, d, Observer{}, ro);
        rows.push_back({cfg.courant, cfg.kappa(), state.step, std::nullopt, std::nullopt});
        finals.push_back(state.curr.phi);
    }
    for (std::size_t l = 0; l + 1 < finals.size(); ++l) {
        double diff = 0.0;
        for (std::size_t i = 0; i < finals[l].size(); ++i) {
            diff = std::max(diff, std::abs(finals[l][i] - finals[l + 1][i]));
        }
        if (!(diff > 1e-15)) {
            throw DegenerateError("successive solutions agree to " + std::to_string(diff) +
                                  "; temporal order undefined");
        }
        rows[l].difference = diff;
    }
    for (std::size_t l = 0; l + 2 < rows.size(); ++l) {
        rows[l].order = std::log2(*rows[l].difference / *rows[l + 1].difference);
    }
    return rows;
}

}  // namespace timo
