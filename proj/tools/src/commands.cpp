#include "timo_app/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "timo/assembly.hpp"
#include "timo/stencil.hpp"
#include "timo_app/csv.hpp"

namespace timo::app {
namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    return out;
}

std::string strip_csv(const std::string& path) {
    constexpr std::string_view ext = ".csv";
    if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
        return path.substr(0, path.size() - ext.size());
    }
    return path;
}

void write_series_row(std::ostream& out, const SeriesRecord& r) {
    write_row(out, {r.t, r.energy, r.max_abs_phi, r.max_abs_psi, r.max_abs_theta, r.max_abs_q});
}

void write_snapshot(std::ostream& out, double t, const FieldLevel& interior, const Mesh& mesh) {
    const FieldLevel full = extend_to_boundary(interior);
    for (std::size_t i = 0; i < full.phi.size(); ++i) {
        write_row(out, {t, mesh.nodes[i], full.phi[i], full.psi[i], full.theta[i], full.q[i]});
    }
}

std::string describe_fit(const DecayFit& f) {
    std::ostringstream s;
    s << (f.model == DecayModel::Exponential ? "rate lambda = " : "exponent p = ")
      << format17(f.slope) << ", intercept = " << format17(f.intercept)
      << ", rms log residual = " << format17(f.residual);
    return s.str();
}

std::string summarize(const RunConfig& cfg, const PhysicalParameters& p, const Mesh& mesh,
                      const SimulateResult& r, long steps_done) {
    const CourantAdvisory adv = courant_advisory(p, cfg.grid);
    std::ostringstream s;
    s << "preset: " << cfg.preset << '\n';
    s << "mu = " << format17(r.mu) << " (" << to_string(r.regime) << ")\n";
    s << "grid: I = " << mesh.intervals << ", T = " << format_shortest(cfg.grid.final_time)
      << ", c = " << format_shortest(cfg.grid.courant) << ", h = " << format17(mesh.h)
      << ", kappa = " << format17(mesh.kappa) << ", N = " << mesh.steps << '\n';
    s << "courant: c * max wave speed = " << format17(adv.product)
      << (adv.warning ? " (warning: exceeds 1)" : "") << '\n';
    s << "scheme: flux_damping = "
      << (cfg.flux_damping == FluxDamping::Averaged ? "averaged" : "centered")
      << ", startup = " << (cfg.startup == Startup::Taylor2 ? "taylor2" : "taylor1") << '\n';
    s << "steps completed: " << steps_done << '\n';
    if (!r.series.empty()) {
        s << "energy: E(0) = " << format17(r.series.front().energy)
          << ", E(end) = " << format17(r.series.back().energy) << '\n';
    }
    if (r.exponential && r.polynomial && r.selection) {
        s << "fit window: [" << format_shortest(r.exponential->window.t_lo) << ", "
          << format_shortest(r.exponential->window.t_hi) << "], " << r.exponential->points
          << " points\n";
        s << "exponential fit: " << describe_fit(*r.exponential) << '\n';
        s << "polynomial fit: " << describe_fit(*r.polynomial) << '\n';
        s << "selected model: " << to_string(r.selection->model)
          << " (margin " << format17(r.selection->margin) << ")\n";
    } else {
        s << "decay fit: unavailable (" << r.fit_note << ")\n";
    }
    char wall[64];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_seconds);
    s << "wall time: " << wall << " s\n";
    return s.str();
}

}  // namespace

std::string cmd_mu(const RunConfig& cfg) {
    const PhysicalParameters p = resolve_parameters(cfg);
    const double mu = stability_number(p);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", mu);
    return "mu = " + std::string(buf) + " (" +
           std::string(to_string(classify_regime(mu, regime_tolerance(p)))) + ")";
}

SimulateOutputs default_outputs(const RunConfig& cfg) {
    const std::string stem = strip_csv(cfg.output);
    SimulateOutputs out;
    out.series = stem + ".csv";
    if (cfg.snapshot_stride > 0) {
        out.snapshots = stem + "_snapshots.csv";
    }
    out.summary = stem + "_summary.txt";
    return out;
}

SimulateResult cmd_simulate(const RunConfig& cfg, const SimulateOutputs& out) {
    const auto started = std::chrono::steady_clock::now();
    const PhysicalParameters p = resolve_parameters(cfg);
    const InitialData data = resolve_initial_data(cfg, p);
    check_boundary_compatibility(data);
    const Mesh mesh = build_mesh(cfg.grid);
    const SchemeMatrices m = assemble(p, cfg.grid);

    SimulateResult result;
    result.mu = stability_number(p);
    result.regime = classify_regime(result.mu, regime_tolerance(p));

    std::ofstream series_out = open_output(out.series);
    series_out << "t,energy,max_abs_phi,max_abs_psi,max_abs_theta,max_abs_q\n";
    std::optional<std::ofstream> snap_out;
    if (out.snapshots && cfg.snapshot_stride > 0) {
        snap_out = open_output(*out.snapshots);
        *snap_out << "t,x,phi,psi,theta,q\n";
    }

    const EnergyOptions energy_opts;
    result.series.push_back(initial_record(data, p, mesh, energy_opts));
    write_series_row(series_out, result.series.back());

    RunOptions run_opts;
    run_opts.scheme.flux_damping = cfg.flux_damping;
    run_opts.scheme.startup = cfg.startup;
    run_opts.stride = snap_out ? 1 : cfg.stride;

    long steps_done = 0;
    const Observer observer = [&](const StepView& v) {
        steps_done = v.n;
        const long k = v.n - 1;
        if (k % cfg.stride == 0) {
            result.series.push_back(make_record(v, p, mesh, energy_opts));
            write_series_row(series_out, result.series.back());
        }
        if (snap_out && k % cfg.snapshot_stride == 0) {
            write_snapshot(*snap_out, v.t, v.current, mesh);
        }
    };

    try {
        (void)run(mesh, m, data, observer, run_opts);
        steps_done = mesh.steps;
    } catch (const BlowUpError&) {
        series_out.flush();
        if (snap_out) {
            snap_out->flush();
        }
        throw;
    }
    if (!series_out.flush()) {
        throw IoError("failed writing '" + out.series + "'");
    }

    try {
        const FitWindow window = resolve_window(cfg);
        result.exponential = fit_exponential(result.series, window);
        result.polynomial = fit_polynomial(result.series, window);
        result.selection = select_decay_model(*result.exponential, *result.polynomial);
    } catch (const FitError& e) {
        result.exponential.reset();
        result.polynomial.reset();
        result.fit_note = e.what();
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.summary = summarize(cfg, p, mesh, result, steps_done);
    if (out.summary) {
        std::ofstream summary_out = open_output(*out.summary);
        summary_out << result.summary;
    }
    return result;
}

std::vector<ConvergenceLine> cmd_convergence(const RunConfig& cfg, int levels) {
    if (levels < 2) {
        throw ConfigError("levels must be at least 2");
    }
    std::vector<ConvergenceLine> lines;

    const auto f = [](double x) { return std::cos(std::numbers::pi * x); };
    const auto f2 = [](double x) { return -std::numbers::pi * std::numbers::pi * std::cos(std::numbers::pi * x); };
    std::vector<int> sizes;
    for (int j = 0; j < levels; ++j) {
        sizes.push_back(8 << j);
    }
    const std::vector<double> orders = estimate_operator_order(f, f2, sizes);
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        ConvergenceLine line{"spatial", static_cast<double>(sizes[j]),
                             compact_operator_error(f, f2, sizes[j]), std::nullopt};
        if (j < orders.size()) {
            line.order = orders[j];
        }
        lines.push_back(line);
    }

    if (levels >= 3) {
        const PhysicalParameters p = resolve_parameters(cfg);
        const InitialData data = resolve_initial_data(cfg, p);
        SchemeOptions opts;
        opts.flux_damping = cfg.flux_damping;
        opts.startup = cfg.startup;
        for (const auto& row : convergence_report(p, data, cfg.grid, levels, opts)) {
            if (!row.difference) {
                continue;
            }
            lines.push_back({"temporal", row.kappa, *row.difference, row.order});
        }
    }
    return lines;
}

std::string render_convergence(const std::vector<ConvergenceLine>& lines) {
    std::ostringstream s;
    s << "study,grid,error,order\n";
    for (const auto& l : lines) {
        s << l.study << ',' << format17(l.grid) << ',' << format17(l.error) << ','
          << (l.order ? format17(*l.order) : "") << '\n';
    }
    return s.str();
}

std::string cmd_plot(const std::string& series_path,
                     const std::optional<std::string>& snapshots_path,
                     const std::string& image_stem) {
    const CsvTable series = read_csv(series_path);
    const std::vector<std::string> expected{"t", "energy", "max_abs_phi",
                                            "max_abs_psi", "max_abs_theta", "max_abs_q"};
    if (series.header != expected) {
        throw IoError("'" + series_path + "' is not a series file (unexpected header)");
    }
    std::optional<CsvTable> snaps;
    if (snapshots_path) {
        snaps = read_csv(*snapshots_path);
        if (snaps->header.size() != 6 || snaps->header[1] != "x") {
            throw IoError("'" + *snapshots_path + "' is not a snapshot file (unexpected header)");
        }
    }

    TimeSeries ts;
    for (const auto& row : series.rows) {
        ts.push_back({0, row[0], row[1], row[2], row[3], row[4], row[5]});
    }
    std::optional<DecayFit> fit;
    try {
        fit = fit_exponential(ts, default_window(ts.back().t));
    } catch (const FitError&) {
    }

    std::ostringstream s;
    s << "set datafile separator ','\n";
    s << "set terminal pngcairo size 900,600\n";
    s << "set grid\n\n";

    s << "set output '" << image_stem << "_max_phi.png'\n";
    s << "set xlabel 't'\nset ylabel 'max |phi|'\n";
    s << "plot '" << series_path << "' skip 1 using 1:3 with lines title 'max |phi|'\n\n";

    s << "set output '" << image_stem << "_energy.png'\n";
    s << "set xlabel 't'\nset ylabel 'ln E'\n";
    if (fit) {
        s << "fit_a = " << format17(fit->intercept) << "\nfit_b = " << format17(fit->slope) << '\n';
        s << "plot '" << series_path << "' skip 1 using 1:(log($2)) with lines title 'ln E', \\\n"
          << "     [" << format_shortest(fit->window.t_lo) << ":" << format_shortest(fit->window.t_hi)
          << "] fit_a + fit_b * x with lines dashtype 2 title 'exponential fit'\n";
    } else {
        s << "plot '" << series_path << "' skip 1 using 1:(log($2)) with lines title 'ln E'\n";
    }

    if (snaps) {
        s << "\nset output '" << image_stem << "_phi_surface.png'\n";
        s << "set xlabel 'x'\nset ylabel 't'\nset zlabel 'phi'\n";
        s << "set dgrid3d 50,50\nset hidden3d\n";
        s << "splot '" << *snapshots_path << "' skip 1 using 2:1:3 with lines title 'phi(x, t)'\n";
    }
    return s.str();
}

}  // namespace timo::app
