#include "pinchlink/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "pinchlink/scenario.hpp"

namespace pinchlink {

namespace {

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& data) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string_view sweep_variable_name(SweepVariable v) {
    switch (v) {
    case SweepVariable::TransmitPowerDb: return "transmit_power_db";
    case SweepVariable::Alpha: return "alpha";
    case SweepVariable::NB: return "n_b";
    case SweepVariable::KWaveguides: return "k_waveguides";
    case SweepVariable::NG: return "n_g";
    }
    return "unknown";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
    if (name == "transmit_power_db") return SweepVariable::TransmitPowerDb;
    if (name == "alpha") return SweepVariable::Alpha;
    if (name == "n_b") return SweepVariable::NB;
    if (name == "k_waveguides") return SweepVariable::KWaveguides;
    if (name == "n_g") return SweepVariable::NG;
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (values.empty()) throw ConfigError("sweep range is empty");
    if (schemes.empty()) throw ConfigError("sweep needs at least one scheme");
}

std::vector<double> sweep_range(double start, double stop, double step) {
    if (!(step > 0.0)) throw ConfigError("sweep step must be positive");
    if (stop < start) throw ConfigError("sweep stop must not precede start");
    std::vector<double> values;
    const double n = std::floor((stop - start) / step + 1e-9);
    for (int i = 0; i <= static_cast<int>(n); ++i) values.push_back(start + i * step);
    return values;
}

SweepSpec sweep_preset(std::string_view name, SystemConfig& cfg) {
    const std::vector<Scheme> all(std::begin(kAllSchemes), std::end(kAllSchemes));
    SweepSpec spec;
    spec.schemes = all;
    spec.mc_enabled = true;
    if (name == "fig4") {
        spec.name = "fig4";
        spec.variable = SweepVariable::TransmitPowerDb;
        spec.values = sweep_range(0.0, 20.0, 1.0);
    } else if (name == "fig5") {
        spec.name = "fig5";
        spec.variable = SweepVariable::Alpha;
        spec.values = sweep_range(2.0, 4.0, 0.1);
    } else if (name == "fig6") {
        spec.name = "fig6";
        spec.variable = SweepVariable::NB;
        spec.values = sweep_range(1.0, 128.0, 1.0);
    } else if (name == "fig7" || name == "fig7a" || name == "fig7b") {
        spec.name = std::string(name);
        spec.variable = SweepVariable::KWaveguides;
        spec.values = sweep_range(1.0, 64.0, 1.0);
        cfg.alpha = (name == "fig7b") ? 2.0 : 2.4;
    } else if (name == "fig8" || name == "fig8a" || name == "fig8b") {
        spec.name = std::string(name);
        spec.variable = SweepVariable::NG;
        spec.values = sweep_range(1.0, 32.0, 1.0);
        cfg.alpha = (name == "fig8b") ? 2.0 : 2.4;
    } else {
        throw ConfigError("unknown sweep preset '" + std::string(name) + "'");
    }
    return spec;
}

std::vector<std::string> sweep_preset_names() {
    return {"fig4", "fig5", "fig6", "fig7", "fig7a", "fig7b", "fig8", "fig8a", "fig8b"};
}

SystemConfig apply_sweep_value(const SystemConfig& cfg, SweepVariable variable,
                               double value) {
    SystemConfig out = cfg;
    switch (variable) {
    case SweepVariable::TransmitPowerDb:
        out.p_t = from_db(value); // 0 dB corresponds to 1 W
        break;
    case SweepVariable::Alpha:
        out.alpha = value;
        break;
    case SweepVariable::NB:
        out.n_b = static_cast<int>(std::lround(value));
        break;
    case SweepVariable::KWaveguides:
        out.k_waveguides = static_cast<int>(std::lround(value));
        if (!cfg.l_g_list.empty())
            throw ConfigError("cannot sweep K with a per-waveguide distance list");
        break;
    case SweepVariable::NG:
        out.n_g = static_cast<int>(std::lround(value));
        break;
    }
    out.validate();
    return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemConfig& cfg) {
    spec.validate();
    std::vector<SweepRow> rows;
    rows.reserve(spec.schemes.size() * spec.values.size());
    for (Scheme scheme : spec.schemes) {
        for (double value : spec.values) {
            const SystemConfig point_cfg = apply_sweep_value(cfg, spec.variable, value);
            SweepRow row;
            row.scheme = scheme;
            row.value = value;
            row.analytic_snr_db = analytic_snr(scheme, point_cfg).snr_db;
            if (spec.mc_enabled) {
                const McEstimate est =
                    estimate_snr(scheme, point_cfg, point_cfg.trials, point_cfg.seed);
                row.mc_snr_db = to_db(est.mean_snr_linear);
                // Delta-method conversion of the linear standard error.
                row.mc_stderr_db =
                    10.0 / std::log(10.0) * est.std_error / est.mean_snr_linear;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const SystemConfig& cfg,
                     const std::vector<SweepRow>& rows) {
    out << "scheme,variable,value,analytic_snr_db,mc_snr_db,mc_stderr_db,trials,seed\n";
    for (const SweepRow& row : rows) {
        out << scheme_name(row.scheme) << ',' << sweep_variable_name(spec.variable) << ','
            << format_g(row.value) << ',' << format_g(row.analytic_snr_db) << ',';
        if (row.mc_snr_db) out << format_g(*row.mc_snr_db);
        out << ',';
        if (row.mc_stderr_db) out << format_g(*row.mc_stderr_db);
        out << ',';
        if (spec.mc_enabled) out << cfg.trials;
        out << ',';
        if (spec.mc_enabled) out << cfg.seed;
        out << '\n';
    }
}

std::string config_hash_hex(const SystemConfig& cfg, const SweepSpec& spec) {
    Scenario s;
    s.cfg = cfg;
    std::uint64_t h = 1469598103934665603ULL;
    h = fnv1a(h, serialize_scenario(s));
    h = fnv1a(h, std::string(sweep_variable_name(spec.variable)));
    for (double v : spec.values) h = fnv1a(h, format_g(v));
    for (Scheme scheme : spec.schemes) h = fnv1a(h, std::string(scheme_name(scheme)));
    h = fnv1a(h, spec.mc_enabled ? "mc" : "no-mc");
    h = fnv1a(h, std::string(kToolVersion));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_manifest(std::ostream& out, const SweepSpec& spec, const SystemConfig& cfg,
                    const std::vector<std::string>& output_paths,
                    std::string_view timestamp_iso8601) {
    out << "config_hash = " << config_hash_hex(cfg, spec) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "trials = " << cfg.trials << "\n";
    out << "tool_version = " << kToolVersion << "\n";
    out << "timestamp = " << timestamp_iso8601 << "\n";
    out << "sweep = " << spec.name << "\n";
    out << "variable = " << sweep_variable_name(spec.variable) << "\n";
    for (const std::string& path : output_paths) out << "output = " << path << "\n";
}

} // namespace pinchlink
