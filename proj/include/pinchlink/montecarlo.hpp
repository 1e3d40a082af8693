#ifndef PINCHLINK_MONTECARLO_HPP
#define PINCHLINK_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pinchlink/analytics.hpp"
#include "pinchlink/beamforming.hpp"
#include "pinchlink/config.hpp"

namespace pinchlink {

/// How the SD scheme randomizes the waveguide phase anchors per trial.
enum class SdPhaseMode {
    DirectUniform,  // draw phi_k ~ U(0, 2pi) directly
    DistanceJitter, // jitter the reference distance by +-lambda/2 and derive the phase
};

struct McOptions {
    std::int64_t trials = 10000;
    std::uint64_t seed = 1;
    SdPhaseMode sd_phase_mode = SdPhaseMode::DirectUniform;
};

struct McEstimate {
    Scheme scheme;
    double mean_snr_linear = 0.0;
    double std_error = 0.0; // standard error of the mean, linear SNR units
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

struct PhasorSum {
    double magnitude = 0.0; // G >= 0
    double angle = 0.0;     // Omega in [0, 2pi)
};

/// Sum of amplitude-weighted phasors a_k exp(-j phi_k) written as G exp(-j Omega).
PhasorSum phasor_sum(std::span<const double> amplitudes, std::span<const double> phases);

/// OpenMP-parallel Monte-Carlo estimate of the average received SNR. Trials
/// are keyed by (seed, trial index) and reduced in a fixed chunked order, so
/// the result is bit-identical for any worker count.
McEstimate estimate_snr(Scheme scheme, const SystemConfig& cfg, std::int64_t trials,
                        std::uint64_t seed);
McEstimate estimate_snr(Scheme scheme, const SystemConfig& cfg, const McOptions& opts);

/// Serial reference implementation; must agree bit-for-bit with estimate_snr.
McEstimate estimate_snr_serial(Scheme scheme, const SystemConfig& cfg,
                               const McOptions& opts);

/// One-sample Kolmogorov-Smirnov statistic against U(lo, hi). Sorts samples.
double ks_statistic_uniform(std::vector<double>& samples, double lo, double hi);

/// Asymptotic KS critical value at significance level 1%.
double ks_critical_1pct(std::size_t n);

struct KsReport {
    double statistic = 0.0;
    double critical_1pct = 0.0;
    std::size_t samples = 0;
    bool pass = false;
};

/// Draws phi_k ~ U(0,2pi), forms the phasor-sum angle Omega and tests
/// Omega mod 2pi against U(0, 2pi).
KsReport validate_uniform_phase(std::span<const double> amplitudes, std::size_t samples,
                                std::uint64_t seed);

struct GSquaredReport {
    double empirical_mean = 0.0;
    double analytic = 0.0; // sum of squared amplitudes
    double std_error = 0.0;
    std::size_t samples = 0;
    bool pass = false;
};

/// Checks E{G^2} = sum_k 1/L_k^beta for uniform random phases.
GSquaredReport validate_g_squared(const SystemConfig& cfg, std::size_t samples,
                                  std::uint64_t seed);
GSquaredReport validate_g_squared(std::span<const double> amplitudes, std::size_t samples,
                                  std::uint64_t seed);

struct PropositionReport {
    // SD and SCD simulated means vs the closed forms, within 3 standard errors.
    double sd_mc = 0.0, sd_analytic = 0.0, sd_std_error = 0.0;
    double scd_mc = 0.0, scd_analytic = 0.0, scd_std_error = 0.0;
    bool sd_ok = false;
    bool scd_ok = false;
    // Gain-proportional waveguide weights vs random simplex weightings.
    bool weights_ok = false;
    // Mean of the BS/PAS cross term, expected zero.
    double cross_mean = 0.0, cross_std_error = 0.0;
    bool cross_ok = false;

    bool all_ok() const { return sd_ok && scd_ok && weights_ok && cross_ok; }
};

PropositionReport validate_propositions(const SystemConfig& cfg, std::int64_t trials,
                                        std::uint64_t seed);

} // namespace pinchlink

#endif
