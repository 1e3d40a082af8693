#ifndef PINCHLINK_SWEEP_HPP
#define PINCHLINK_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pinchlink/analytics.hpp"
#include "pinchlink/beamforming.hpp"
#include "pinchlink/config.hpp"
#include "pinchlink/montecarlo.hpp"

namespace pinchlink {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class SweepVariable { TransmitPowerDb, Alpha, NB, KWaveguides, NG };

std::string_view sweep_variable_name(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

struct SweepSpec {
    std::string name;                 // used for output file naming
    SweepVariable variable = SweepVariable::TransmitPowerDb;
    std::vector<double> values;       // sweep points, in declaration order
    std::vector<Scheme> schemes;      // non-empty
    bool mc_enabled = true;

    void validate() const; // throws ConfigError
};

/// Evenly spaced values [start, stop] with the given positive step.
std::vector<double> sweep_range(double start, double stop, double step);

/// Figure presets: fig4 (transmit power 0..20 dB), fig5 (alpha 2..4),
/// fig6 (N_B 1..128), fig7a/b (K 1..64 at alpha 2.4 / 2.0) and fig8a/b
/// (N_G 1..32 at alpha 2.4 / 2.0). fig7/fig8 alias the (a) variants.
/// Presets that pin alpha modify cfg accordingly.
SweepSpec sweep_preset(std::string_view name, SystemConfig& cfg);

std::vector<std::string> sweep_preset_names();

struct SweepRow {
    Scheme scheme;
    double value = 0.0;
    double analytic_snr_db = 0.0;
    std::optional<double> mc_snr_db;
    std::optional<double> mc_stderr_db;
};

/// Returns cfg with the sweep variable set to the given value.
SystemConfig apply_sweep_value(const SystemConfig& cfg, SweepVariable variable,
                               double value);

/// Runs the sweep: one row per (scheme, value), schemes outermost, in spec
/// order. Monte-Carlo columns are filled when spec.mc_enabled.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemConfig& cfg);

/// CSV schema: scheme,variable,value,analytic_snr_db,mc_snr_db,mc_stderr_db,trials,seed.
/// MC cells are empty when Monte Carlo is disabled.
void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const SystemConfig& cfg,
                     const std::vector<SweepRow>& rows);

/// FNV-1a hash over everything that affects the output rows.
std::string config_hash_hex(const SystemConfig& cfg, const SweepSpec& spec);

void write_manifest(std::ostream& out, const SweepSpec& spec, const SystemConfig& cfg,
                    const std::vector<std::string>& output_paths,
                    std::string_view timestamp_iso8601);

} // namespace pinchlink

#endif
