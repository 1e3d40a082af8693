#include "pinchlink/cli.hpp"

#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "pinchlink/analytics.hpp"
#include "pinchlink/montecarlo.hpp"
#include "pinchlink/scenario.hpp"
#include "pinchlink/sweep.hpp"

namespace pinchlink::cli {

namespace {

constexpr int kOk = 0;
constexpr int kStatisticalFailure = 1;
constexpr int kConfigError = 2;
constexpr int kPlacementError = 3;

struct Options {
    std::string command;
    std::optional<std::string> config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    bool no_mc = false;
    std::optional<std::string> preset;
    std::optional<std::string> variable;
    std::optional<double> start, stop, step;
    std::optional<std::string> values;
    std::optional<std::string> schemes;
};

void print_usage(std::ostream& out) {
    out << "usage: pinchlink <command> [options]\n"
        << "\n"
        << "commands:\n"
        << "  analyze      closed-form SNRs, gains and (with geometry) placements\n"
        << "  mc           Monte-Carlo SNR estimates vs the closed forms\n"
        << "  sweep        parameter sweep to CSV (--preset fig4..fig8 or --variable ...)\n"
        << "  validate     statistical validation of the averaging assumptions\n"
        << "  thresholds   break-even parameter thresholds and gains\n"
        << "\n"
        << "options:\n"
        << "  --config <path>    scenario file (key = value)\n"
        << "  --out <dir>        output directory for sweep results (default .)\n"
        << "  --seed <u64>       RNG seed override\n"
        << "  --trials <n>       Monte-Carlo trials override\n"
        << "  --no-mc            skip Monte-Carlo columns in sweeps\n"
        << "  --preset <name>    fig4 fig5 fig6 fig7[a|b] fig8[a|b]\n"
        << "  --variable <name>  transmit_power_db alpha n_b k_waveguides n_g\n"
        << "  --start/--stop/--step <v>  sweep range\n"
        << "  --values <list>    explicit comma-separated sweep points\n"
        << "  --schemes <list>   comma-separated subset of bs_only,sd,scd,fcd\n";
}

double parse_double_arg(const std::string& flag, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("invalid number for " + flag + ": '" + value + "'");
    }
    if (pos != value.size()) throw ConfigError("invalid number for " + flag + ": '" + value + "'");
    return v;
}

Options parse_args(const std::vector<std::string>& args) {
    Options opt;
    if (args.empty()) throw ConfigError("missing command");
    opt.command = args[0];
    std::size_t i = 1;
    const auto need_value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) throw ConfigError("flag " + flag + " needs a value");
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") opt.config_path = need_value(a);
        else if (a == "--out") opt.out_dir = need_value(a);
        else if (a == "--seed") opt.seed = std::stoull(need_value(a));
        else if (a == "--trials") opt.trials = std::stoll(need_value(a));
        else if (a == "--no-mc") opt.no_mc = true;
        else if (a == "--preset") opt.preset = need_value(a);
        else if (a == "--variable") opt.variable = need_value(a);
        else if (a == "--start") opt.start = parse_double_arg(a, need_value(a));
        else if (a == "--stop") opt.stop = parse_double_arg(a, need_value(a));
        else if (a == "--step") opt.step = parse_double_arg(a, need_value(a));
        else if (a == "--values") opt.values = need_value(a);
        else if (a == "--schemes") opt.schemes = need_value(a);
        else throw ConfigError("unknown flag '" + a + "'");
    }
    return opt;
}

Scenario load(const Options& opt) {
    Scenario scenario;
    if (opt.config_path) scenario = load_scenario(*opt.config_path);
    if (opt.seed) scenario.cfg.seed = *opt.seed;
    if (opt.trials) scenario.cfg.trials = *opt.trials;
    // Materialize geometry-derived distances so the analytic and
    // Monte-Carlo paths see the same per-waveguide values.
    if (scenario.geometry && scenario.cfg.l_g_list.empty())
        scenario.cfg.l_g_list = scenario.waveguide_distances();
    scenario.cfg.validate();
    return scenario;
}

std::vector<Scheme> parse_scheme_list(const std::string& csv) {
    std::vector<Scheme> schemes;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto s = parse_scheme(token);
        if (!s) throw ConfigError("unknown scheme '" + token + "'");
        schemes.push_back(*s);
    }
    if (schemes.empty()) throw ConfigError("scheme list is empty");
    return schemes;
}

std::vector<double> parse_value_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        values.push_back(parse_double_arg("--values", token));
    }
    return values;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
    const Scenario scenario = load(opt);
    const SystemConfig& cfg = scenario.cfg;
    const std::vector<double> distances = scenario.waveguide_distances();

    out << "configuration: N_B=" << cfg.n_b << " K=" << cfg.k_waveguides
        << " N_G=" << cfg.n_g << " alpha=" << cfg.alpha << " beta=" << cfg.beta
        << " L_B=" << cfg.l_b << "m P_t=" << cfg.p_t << "W\n";
    out << "transmit SNR: " << to_db(transmit_snr(cfg)) << " dB\n\n";

    out << "scheme    analytic SNR (dB)\n";
    for (Scheme s : kAllSchemes) {
        const SnrReport r = analytic_snr(s, cfg, distances);
        out << std::left << std::setw(10) << scheme_name(s) << std::setprecision(6)
            << std::fixed << r.snr_db << std::defaultfloat << "\n";
    }

    const GainReport g = gain_ratios(cfg);
    out << "\njoint transmission gains vs bs_only (equal distances):\n";
    out << "  V_SD = " << g.v_sd << "  V_SCD = " << g.v_scd << "  V_FCD = " << g.v_fcd
        << "\n";
    const PowerAllocation pa = fcd_average_power_ratios(cfg, distances);
    out << "FCD average BS power fraction: " << pa.bs_fraction << "\n";

    if (scenario.geometry) {
        const auto& geo = *scenario.geometry;
        out << "\ngeometry (" << geo.waveguides.size() << " waveguides):\n";
        out << "  raw anchors (rad):";
        std::vector<PlacementResult> raw;
        for (const auto& wg : geo.waveguides)
            raw.push_back(place_intra_waveguide(wg, geo.ue, cfg));
        for (const auto& p : raw) out << " " << p.phase_anchor;
        out << "\n  scd-aligned anchors:";
        for (const auto& p : align_scd(geo.waveguides, geo.ue, cfg))
            out << " " << p.phase_anchor;
        out << "\n  fcd-aligned anchors:";
        for (const auto& p : align_fcd(geo.waveguides, geo.ue, cfg))
            out << " " << p.phase_anchor;
        out << "\n  reference distances (m):";
        for (double d : distances) out << " " << d;
        out << "\n";
    }
    return kOk;
}

int cmd_mc(const Options& opt, std::ostream& out) {
    const Scenario scenario = load(opt);
    const SystemConfig& cfg = scenario.cfg;
    const std::vector<double> distances = scenario.waveguide_distances();
    out << "trials=" << cfg.trials << " seed=" << cfg.seed << "\n";
    out << "scheme    mc SNR (dB)  stderr (dB)  analytic (dB)\n";
    for (Scheme s : kAllSchemes) {
        const McEstimate est = estimate_snr(s, cfg, cfg.trials, cfg.seed);
        const SnrReport r = analytic_snr(s, cfg, distances);
        const double mc_db = to_db(est.mean_snr_linear);
        const double se_db = 10.0 / std::log(10.0) * est.std_error / est.mean_snr_linear;
        out << std::left << std::setw(10) << scheme_name(s) << std::setprecision(4)
            << std::fixed << std::setw(13) << mc_db << std::setw(13) << se_db
            << std::setw(13) << r.snr_db << std::defaultfloat << "\n";
    }
    return kOk;
}

int cmd_thresholds(const Options& opt, std::ostream& out) {
    const Scenario scenario = load(opt);
    const GainReport g = gain_ratios(scenario.cfg);
    out << "break-even thresholds vs bs_only:\n";
    out << "  alpha* (SD)  = " << g.thresholds.alpha_sd << "\n";
    out << "  alpha* (SCD) = " << g.thresholds.alpha_scd << "\n";
    out << "  N_G* (SD)    = " << g.thresholds.ng_sd << "\n";
    out << "  N_G* (SCD)   = " << g.thresholds.ng_scd << "\n";
    out << "gains at this configuration:\n";
    out << "  V_SD = " << g.v_sd << "  V_SCD = " << g.v_scd << "  V_FCD = " << g.v_fcd
        << "\n";
    return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
    const Scenario scenario = load(opt);
    const SystemConfig& cfg = scenario.cfg;
    if (cfg.trials < 1000)
        out << "warning: " << cfg.trials
            << " trials give little statistical power; results may be noisy\n";

    bool ok = true;

    const PropositionReport prop = validate_propositions(cfg, cfg.trials, cfg.seed);
    out << (prop.sd_ok ? "[pass]" : "[FAIL]") << " SD mean gain: mc=" << prop.sd_mc
        << " analytic=" << prop.sd_analytic << " se=" << prop.sd_std_error << "\n";
    out << (prop.scd_ok ? "[pass]" : "[FAIL]") << " SCD mean gain: mc=" << prop.scd_mc
        << " analytic=" << prop.scd_analytic << " se=" << prop.scd_std_error << "\n";
    out << (prop.weights_ok ? "[pass]" : "[FAIL]")
        << " gain-proportional waveguide weights are optimal\n";
    out << (prop.cross_ok ? "[pass]" : "[FAIL]")
        << " BS/PAS cross term averages to zero: mean=" << prop.cross_mean
        << " se=" << prop.cross_std_error << "\n";
    ok = ok && prop.all_ok();

    const std::vector<double> distances = scenario.waveguide_distances();
    std::vector<double> amplitudes;
    for (double d : distances) amplitudes.push_back(std::sqrt(1.0 / std::pow(d, cfg.beta)));
    const std::size_t ks_samples = 100000;
    const KsReport ks = validate_uniform_phase(amplitudes, ks_samples, cfg.seed);
    out << (ks.pass ? "[pass]" : "[FAIL]") << " phasor-sum angle uniformity: KS="
        << ks.statistic << " critical(1%)=" << ks.critical_1pct << "\n";
    ok = ok && ks.pass;

    const GSquaredReport g2 = validate_g_squared(amplitudes, ks_samples, cfg.seed);
    out << (g2.pass ? "[pass]" : "[FAIL]") << " E{G^2}: empirical=" << g2.empirical_mean
        << " analytic=" << g2.analytic << " se=" << g2.std_error << "\n";
    ok = ok && g2.pass;

    out << (ok ? "validation passed\n" : "validation FAILED\n");
    return ok ? kOk : kStatisticalFailure;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    Scenario scenario = load(opt);
    SystemConfig& cfg = scenario.cfg;

    SweepSpec spec;
    if (opt.preset) {
        spec = sweep_preset(*opt.preset, cfg);
    } else if (opt.variable) {
        const auto var = parse_sweep_variable(*opt.variable);
        if (!var) throw ConfigError("unknown sweep variable '" + *opt.variable + "'");
        spec.variable = *var;
        spec.name = *opt.variable;
        if (opt.values) {
            spec.values = parse_value_list(*opt.values);
        } else {
            if (!opt.start || !opt.stop || !opt.step)
                throw ConfigError("sweep needs --values or --start/--stop/--step");
            spec.values = sweep_range(*opt.start, *opt.stop, *opt.step);
        }
        spec.schemes = std::vector<Scheme>(std::begin(kAllSchemes), std::end(kAllSchemes));
    } else {
        throw ConfigError("sweep needs --preset or --variable");
    }
    if (opt.schemes) spec.schemes = parse_scheme_list(*opt.schemes);
    if (opt.no_mc) spec.mc_enabled = false;
    spec.validate();

    const std::vector<SweepRow> rows = run_sweep(spec, cfg);

    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    const fs::path csv_path = fs::path(opt.out_dir) / (spec.name + ".csv");
    const fs::path manifest_path = fs::path(opt.out_dir) / (spec.name + ".manifest");
    {
        std::ofstream csv(csv_path);
        if (!csv) throw ConfigError("cannot write " + csv_path.string());
        write_sweep_csv(csv, spec, cfg, rows);
    }
    {
        std::ofstream manifest(manifest_path);
        if (!manifest) throw ConfigError("cannot write " + manifest_path.string());
        write_manifest(manifest, spec, cfg, {csv_path.string()}, utc_timestamp());
    }
    out << "wrote " << csv_path.string() << "\n";
    out << "wrote " << manifest_path.string() << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const Options opt = parse_args(args);
        if (opt.command == "analyze") return cmd_analyze(opt, out);
        if (opt.command == "mc") return cmd_mc(opt, out);
        if (opt.command == "sweep") return cmd_sweep(opt, out);
        if (opt.command == "validate") return cmd_validate(opt, out);
        if (opt.command == "thresholds") return cmd_thresholds(opt, out);
        if (opt.command == "help" || opt.command == "--help" || opt.command == "-h") {
            print_usage(out);
            return kOk;
        }
        throw ConfigError("unknown command '" + opt.command + "'");
    } catch (const PlacementInfeasible& e) {
        err << "placement error: " << e.what() << "\n";
        return kPlacementError;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

} // namespace pinchlink::cli
