#ifndef PINCHLINK_ANALYTICS_HPP
#define PINCHLINK_ANALYTICS_HPP

#include <span>

#include "pinchlink/beamforming.hpp"
#include "pinchlink/config.hpp"

namespace pinchlink {

struct SnrReport {
    Scheme scheme;
    double snr_linear = 0.0;
    double snr_db = 0.0;
};

struct GainThresholds {
    double alpha_sd = 0.0;  // BS-UE exponent above which SD beats BS-only
    double alpha_scd = 0.0; // same for SCD
    double ng_sd = 0.0;     // per-waveguide antenna count above which SD beats BS-only
    double ng_scd = 0.0;    // same for SCD
};

struct GainReport {
    double v_sd = 0.0;
    double v_scd = 0.0;
    double v_fcd = 0.0;
    GainThresholds thresholds;
};

struct AsymptoticRatios {
    double scd_over_sd_limit = 0.0;   // K
    double fcd_over_scd_limit = 0.0;  // 1 + N_B / K
    double fcd_over_scd_exact = 0.0;  // closed form at the given configuration
};

/// L_B^alpha / L_G^beta, the large-scale path-loss ratio of the two links.
double path_loss_ratio(const SystemConfig& cfg);

/// Closed-form average received SNR per scheme with per-waveguide distances.
SnrReport analytic_snr(Scheme scheme, const SystemConfig& cfg,
                       std::span<const double> distances);

/// Same, with distances taken from the configuration.
SnrReport analytic_snr(Scheme scheme, const SystemConfig& cfg);

/// Closed-form joint transmission gains relative to BS-only, plus the
/// break-even thresholds. Assumes equal waveguide distances.
GainReport gain_ratios(const SystemConfig& cfg);

AsymptoticRatios asymptotic_ratios(const SystemConfig& cfg);

} // namespace pinchlink

#endif
