#include "timo_app/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "timo_app/csv.hpp"

namespace timo::app {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("key '" + std::string(key) + "': '" + std::string(value) +
                          "' is not a number");
    }
    return out;
}

long parse_long(std::string_view key, std::string_view value) {
    long out = 0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("key '" + std::string(key) + "': '" + std::string(value) +
                          "' is not an integer");
    }
    return out;
}

// "1:0.5, 3:-0.25"; an empty value is an empty list.
ModeList parse_modes(std::string_view key, std::string_view value) {
    ModeList out;
    while (!trim(value).empty()) {
        const auto comma = value.find(',');
        const auto item = trim(value.substr(0, comma));
        value = comma == std::string_view::npos ? std::string_view{} : value.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigError("key '" + std::string(key) + "': expected mode:amplitude, got '" +
                              std::string(item) + "'");
        }
        const long mode = parse_long(key, trim(item.substr(0, colon)));
        if (mode < 0) {
            throw ConfigError("key '" + std::string(key) + "': mode numbers must be >= 0");
        }
        out.push_back({static_cast<int>(mode), parse_double(key, trim(item.substr(colon + 1)))});
    }
    return out;
}

std::string render_modes(const ModeList& modes) {
    std::string out;
    for (const auto& m : modes) {
        out += out.empty() ? "" : ", ";
        out += std::to_string(m.mode) + ":" + format_shortest(m.amplitude);
    }
    return out;
}

ModeList* mode_slot(ModeData& d, std::string_view key) {
    if (key == "phi0") return &d.phi0;
    if (key == "phi1") return &d.phi1;
    if (key == "psi0") return &d.psi0;
    if (key == "psi1") return &d.psi1;
    if (key == "theta0") return &d.theta0;
    if (key == "theta1") return &d.theta1;
    if (key == "q0") return &d.q0;
    if (key == "q1") return &d.q1;
    return nullptr;
}

std::optional<double>* override_slot(ParameterOverrides& o, std::string_view key) {
    if (key == "rho1") return &o.rho1;
    if (key == "rho2") return &o.rho2;
    if (key == "rho3") return &o.rho3;
    if (key == "k") return &o.k;
    if (key == "b") return &o.b;
    if (key == "delta") return &o.delta;
    if (key == "beta") return &o.beta;
    if (key == "tau") return &o.tau;
    return nullptr;
}

constexpr std::array<std::string_view, 8> kParameterKeys{"rho1", "rho2", "rho3", "k",
                                                         "b",    "delta", "beta", "tau"};
constexpr std::array<std::string_view, 8> kModeKeys{"phi0",   "phi1",   "psi0", "psi1",
                                                    "theta0", "theta1", "q0",   "q1"};

void apply(RunConfig& cfg, std::string_view key, std::string_view value) {
    if (auto* slot = override_slot(cfg.overrides, key)) {
        *slot = parse_double(key, value);
    } else if (auto* modes = mode_slot(cfg.modes, key)) {
        *modes = parse_modes(key, value);
    } else if (key == "preset") {
        if (value != "none") {
            (void)lookup_preset(value);
        }
        cfg.preset = std::string(value);
    } else if (key == "I") {
        cfg.grid.intervals = static_cast<int>(parse_long(key, value));
    } else if (key == "T") {
        cfg.grid.final_time = parse_double(key, value);
    } else if (key == "c") {
        cfg.grid.courant = parse_double(key, value);
    } else if (key == "initial") {
        if (value == "paper") cfg.initial = InitialKind::Paper;
        else if (value == "zero") cfg.initial = InitialKind::Zero;
        else if (value == "modes") cfg.initial = InitialKind::Modes;
        else throw ConfigError("key 'initial': expected paper, zero or modes");
    } else if (key == "stride") {
        cfg.stride = parse_long(key, value);
    } else if (key == "snapshot_stride") {
        cfg.snapshot_stride = parse_long(key, value);
    } else if (key == "output") {
        cfg.output = std::string(value);
    } else if (key == "fit_lo") {
        cfg.fit_lo = parse_double(key, value);
    } else if (key == "fit_hi") {
        cfg.fit_hi = parse_double(key, value);
    } else if (key == "flux_damping") {
        if (value == "averaged") cfg.flux_damping = FluxDamping::Averaged;
        else if (value == "centered") cfg.flux_damping = FluxDamping::Centered;
        else throw ConfigError("key 'flux_damping': expected averaged or centered");
    } else if (key == "startup") {
        if (value == "taylor2") cfg.startup = Startup::Taylor2;
        else if (value == "taylor1") cfg.startup = Startup::Taylor1;
        else throw ConfigError("key 'startup': expected taylor2 or taylor1");
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "'");
    }
}

void validate_run(const RunConfig& cfg) {
    try {
        validate(cfg.grid);
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        const char* key = msg.rfind("I ", 0) == 0 ? "I" : msg.rfind("c ", 0) == 0 ? "c" : "T";
        throw ConfigError("key '" + std::string(key) + "': " + msg);
    }
    if (cfg.stride < 1) {
        throw ConfigError("key 'stride': must be at least 1");
    }
    if (cfg.snapshot_stride < 0) {
        throw ConfigError("key 'snapshot_stride': must be >= 0");
    }
    if (cfg.fit_lo && cfg.fit_hi && !(*cfg.fit_hi > *cfg.fit_lo)) {
        throw ConfigError("key 'fit_hi': must exceed fit_lo");
    }
    for (auto key : {"psi0", "psi1", "q0", "q1"}) {
        for (const auto& m : *mode_slot(const_cast<ModeData&>(cfg.modes), key)) {
            if (m.mode < 1) {
                throw ConfigError("key '" + std::string(key) +
                                  "': sine modes start at 1 (got " + std::to_string(m.mode) + ")");
            }
        }
    }
    (void)resolve_parameters(cfg);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": missing key");
        }
        try {
            apply(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    validate_run(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string render_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "preset = " << cfg.preset << '\n';
    auto& ov = const_cast<ParameterOverrides&>(cfg.overrides);
    for (auto key : kParameterKeys) {
        if (const auto& v = *override_slot(ov, key)) {
            out << key << " = " << format_shortest(*v) << '\n';
        }
    }
    out << "I = " << cfg.grid.intervals << '\n';
    out << "T = " << format_shortest(cfg.grid.final_time) << '\n';
    out << "c = " << format_shortest(cfg.grid.courant) << '\n';
    out << "initial = "
        << (cfg.initial == InitialKind::Paper  ? "paper"
            : cfg.initial == InitialKind::Zero ? "zero"
                                               : "modes")
        << '\n';
    auto& modes = const_cast<ModeData&>(cfg.modes);
    for (auto key : kModeKeys) {
        const auto& list = *mode_slot(modes, key);
        if (!list.empty()) {
            out << key << " = " << render_modes(list) << '\n';
        }
    }
    out << "stride = " << cfg.stride << '\n';
    out << "snapshot_stride = " << cfg.snapshot_stride << '\n';
    out << "output = " << cfg.output << '\n';
    if (cfg.fit_lo) {
        out << "fit_lo = " << format_shortest(*cfg.fit_lo) << '\n';
    }
    if (cfg.fit_hi) {
        out << "fit_hi = " << format_shortest(*cfg.fit_hi) << '\n';
    }
    out << "flux_damping = "
        << (cfg.flux_damping == FluxDamping::Averaged ? "averaged" : "centered") << '\n';
    out << "startup = " << (cfg.startup == Startup::Taylor2 ? "taylor2" : "taylor1") << '\n';
    return out.str();
}

PhysicalParameters resolve_parameters(const RunConfig& cfg) {
    PhysicalParameters p;
    const bool from_preset = cfg.preset != "none";
    if (from_preset) {
        p = lookup_preset(cfg.preset).parameters;
    }
    const ParameterOverrides& o = cfg.overrides;
    const std::array<std::pair<const std::optional<double>*, double*>, 8> slots{{
        {&o.rho1, &p.rho1}, {&o.rho2, &p.rho2}, {&o.rho3, &p.rho3}, {&o.k, &p.k},
        {&o.b, &p.b},       {&o.delta, &p.delta}, {&o.beta, &p.beta}, {&o.tau, &p.tau}}};
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& [value, field] = slots[i];
        if (value->has_value()) {
            if (!(std::isfinite(**value) && **value > 0.0)) {
                throw ConfigError("key '" + std::string(kParameterKeys[i]) +
                                  "': must be a finite positive number");
            }
            *field = **value;
        } else if (!from_preset) {
            throw ConfigError("key '" + std::string(kParameterKeys[i]) +
                              "': required when preset = none");
        }
    }
    validate(p);
    return p;
}

Profile cosine_series(const ModeList& modes) {
    return [modes](double x) {
        double s = 0.0;
        for (const auto& m : modes) {
            s += m.amplitude * std::cos(m.mode * std::numbers::pi * x);
        }
        return s;
    };
}

Profile sine_series(const ModeList& modes) {
    return [modes](double x) {
        double s = 0.0;
        for (const auto& m : modes) {
            s += m.amplitude * std::sin(m.mode * std::numbers::pi * x);
        }
        return s;
    };
}

InitialData resolve_initial_data(const RunConfig& cfg, const PhysicalParameters& p) {
    switch (cfg.initial) {
    case InitialKind::Paper:
        return paper_initial_data(p);
    case InitialKind::Zero:
        return zero_initial_data();
    case InitialKind::Modes:
        break;
    }
    const ModeData& m = cfg.modes;
    return {cosine_series(m.phi0),   cosine_series(m.phi1),   sine_series(m.psi0),
            sine_series(m.psi1),     cosine_series(m.theta0), cosine_series(m.theta1),
            sine_series(m.q0),       sine_series(m.q1)};
}

FitWindow resolve_window(const RunConfig& cfg) {
    FitWindow w = default_window(cfg.grid.final_time);
    if (cfg.fit_lo) {
        w.t_lo = *cfg.fit_lo;
    }
    if (cfg.fit_hi) {
        w.t_hi = *cfg.fit_hi;
    }
    return w;
}

}  // namespace timo::app
