#include "pinchlink/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "pinchlink/channel.hpp"
#include "pinchlink/rng.hpp"

namespace pinchlink {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Trials are accumulated per chunk in trial order and the chunk sums are
// combined with a fixed pairwise tree, so serial and parallel runs produce
// bit-identical results.
constexpr std::int64_t kChunk = 1024;

double wrap_2pi(double phase) {
    double w = std::fmod(phase, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

double pairwise_sum(std::span<const double> v) {
    if (v.empty()) return 0.0;
    if (v.size() == 1) return v[0];
    const std::size_t mid = v.size() / 2;
    return pairwise_sum(v.subspan(0, mid)) + pairwise_sum(v.subspan(mid));
}

/// Received SNR of a single fading realization under the given scheme.
double trial_snr(Scheme scheme, const SystemConfig& cfg,
                 std::span<const double> base_distances, double lambda,
                 SdPhaseMode sd_mode, std::uint64_t seed, std::int64_t trial) {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    const BsChannel bs = sample_bs_channel(cfg, rng);
    const double e = eta(cfg);
    const std::size_t k = base_distances.size();

    std::vector<double> gains(k);
    std::vector<double> anchors(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        gains[i] = std::sqrt(e * cfg.n_g / std::pow(base_distances[i], cfg.beta));

    switch (scheme) {
    case Scheme::BsOnly: {
        const JointChannel h = joint_channel_from_anchors(bs, gains, anchors, cfg);
        return received_snr(h, make_bs_only_beamformer(bs, cfg), cfg);
    }
    case Scheme::SD: {
        if (sd_mode == SdPhaseMode::DirectUniform) {
            for (std::size_t i = 0; i < k; ++i) anchors[i] = rng.uniform(0.0, kTwoPi);
        } else {
            for (std::size_t i = 0; i < k; ++i) {
                const double d = base_distances[i] + lambda * (rng.uniform() - 0.5);
                gains[i] = std::sqrt(e * cfg.n_g / std::pow(d, cfg.beta));
                anchors[i] = wrap_2pi(kTwoPi * d / lambda);
            }
        }
        const JointChannel h = joint_channel_from_anchors(bs, gains, anchors, cfg);
        return received_snr(h, make_sd_beamformer(bs, cfg), cfg);
    }
    case Scheme::SCD: {
        const double phi1 = rng.uniform(0.0, kTwoPi);
        std::fill(anchors.begin(), anchors.end(), phi1);
        std::vector<double> power_gains(k);
        for (std::size_t i = 0; i < k; ++i) power_gains[i] = gains[i] * gains[i];
        const JointChannel h = joint_channel_from_anchors(bs, gains, anchors, cfg);
        return received_snr(h, make_scd_beamformer(bs, power_gains, anchors, cfg), cfg);
    }
    case Scheme::FCD: {
        const JointChannel h = joint_channel_from_anchors(bs, gains, anchors, cfg);
        return received_snr(h, make_fcd_beamformer(h), cfg);
    }
    }
    throw std::invalid_argument("unknown scheme");
}

McEstimate finish_estimate(Scheme scheme, const McOptions& opts,
                           std::span<const double> chunk_sums,
                           std::span<const double> chunk_sq_sums) {
    const double n = static_cast<double>(opts.trials);
    const double s1 = pairwise_sum(chunk_sums);
    const double s2 = pairwise_sum(chunk_sq_sums);
    const double mean = s1 / n;
    double se = 0.0;
    if (opts.trials > 1) {
        const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1.0));
        se = std::sqrt(var / n);
    }
    return {scheme, mean, se, opts.trials, opts.seed};
}

} // namespace

PhasorSum phasor_sum(std::span<const double> amplitudes, std::span<const double> phases) {
    if (amplitudes.size() != phases.size())
        throw std::invalid_argument("amplitude/phase length mismatch");
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        acc += std::polar(amplitudes[i], -phases[i]);
    return {std::abs(acc), wrap_2pi(-std::arg(acc))};
}

McEstimate estimate_snr(Scheme scheme, const SystemConfig& cfg, std::int64_t trials,
                        std::uint64_t seed) {
    McOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    return estimate_snr(scheme, cfg, opts);
}

McEstimate estimate_snr(Scheme scheme, const SystemConfig& cfg, const McOptions& opts) {
    if (opts.trials < 1) throw std::invalid_argument("trials must be at least 1");
    const std::vector<double> distances = cfg.waveguide_distances();
    const double lambda = wavelengths(cfg).lambda;
    const std::int64_t n_chunks = (opts.trials + kChunk - 1) / kChunk;
    std::vector<double> sums(static_cast<std::size_t>(n_chunks), 0.0);
    std::vector<double> sq_sums(static_cast<std::size_t>(n_chunks), 0.0);

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < n_chunks; ++c) {
        const std::int64_t begin = c * kChunk;
        const std::int64_t end = std::min(opts.trials, begin + kChunk);
        double s1 = 0.0, s2 = 0.0;
        for (std::int64_t t = begin; t < end; ++t) {
            const double x =
                trial_snr(scheme, cfg, distances, lambda, opts.sd_phase_mode, opts.seed, t);
            s1 += x;
            s2 += x * x;
        }
        sums[static_cast<std::size_t>(c)] = s1;
        sq_sums[static_cast<std::size_t>(c)] = s2;
    }
    return finish_estimate(scheme, opts, sums, sq_sums);
}

McEstimate estimate_snr_serial(Scheme scheme, const SystemConfig& cfg,
                               const McOptions& opts) {
    if (opts.trials < 1) throw std::invalid_argument("trials must be at least 1");
    const std::vector<double> distances = cfg.waveguide_distances();
    const double lambda = wavelengths(cfg).lambda;
    const std::int64_t n_chunks = (opts.trials + kChunk - 1) / kChunk;
    std::vector<double> sums(static_cast<std::size_t>(n_chunks), 0.0);
    std::vector<double> sq_sums(static_cast<std::size_t>(n_chunks), 0.0);

    for (std::int64_t c = 0; c < n_chunks; ++c) {
        const std::int64_t begin = c * kChunk;
        const std::int64_t end = std::min(opts.trials, begin + kChunk);
        double s1 = 0.0, s2 = 0.0;
        for (std::int64_t t = begin; t < end; ++t) {
            const double x =
                trial_snr(scheme, cfg, distances, lambda, opts.sd_phase_mode, opts.seed, t);
            s1 += x;
            s2 += x * x;
        }
        sums[static_cast<std::size_t>(c)] = s1;
        sq_sums[static_cast<std::size_t>(c)] = s2;
    }
    return finish_estimate(scheme, opts, sums, sq_sums);
}

double ks_statistic_uniform(std::vector<double>& samples, double lo, double hi) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = (samples[i] - lo) / (hi - lo);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

double ks_critical_1pct(std::size_t n) {
    // Asymptotic Kolmogorov quantile at alpha = 0.01.
    return 1.62762 / std::sqrt(static_cast<double>(n));
}

KsReport validate_uniform_phase(std::span<const double> amplitudes, std::size_t samples,
                                std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("no samples");
    std::vector<double> angles;
    angles.reserve(samples);
    std::vector<double> phases(amplitudes.size());
    for (std::size_t i = 0; i < samples; ++i) {
        TrialRng rng(seed, i);
        for (double& phi : phases) phi = rng.uniform(0.0, kTwoPi);
        angles.push_back(phasor_sum(amplitudes, phases).angle);
    }
    KsReport report;
    report.samples = samples;
    report.statistic = ks_statistic_uniform(angles, 0.0, kTwoPi);
    report.critical_1pct = ks_critical_1pct(samples);
    report.pass = report.statistic < report.critical_1pct;
    return report;
}

GSquaredReport validate_g_squared(const SystemConfig& cfg, std::size_t samples,
                                  std::uint64_t seed) {
    const std::vector<double> distances = cfg.waveguide_distances();
    std::vector<double> amplitudes;
    amplitudes.reserve(distances.size());
    for (double d : distances) amplitudes.push_back(std::sqrt(1.0 / std::pow(d, cfg.beta)));
    return validate_g_squared(amplitudes, samples, seed);
}

GSquaredReport validate_g_squared(std::span<const double> amplitudes, std::size_t samples,
                                  std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("no samples");
    double s1 = 0.0, s2 = 0.0;
    std::vector<double> phases(amplitudes.size());
    for (std::size_t i = 0; i < samples; ++i) {
        TrialRng rng(seed, i);
        for (double& phi : phases) phi = rng.uniform(0.0, kTwoPi);
        const double g = phasor_sum(amplitudes, phases).magnitude;
        s1 += g * g;
        s2 += g * g * g * g;
    }
    GSquaredReport report;
    report.samples = samples;
    report.empirical_mean = s1 / static_cast<double>(samples);
    for (double a : amplitudes) report.analytic += a * a;
    const double n = static_cast<double>(samples);
    const double var = std::max(0.0, (s2 - n * report.empirical_mean * report.empirical_mean) / (n - 1.0));
    report.std_error = std::sqrt(var / n);
    // A single deterministic phasor (K=1 or all-equal magnitudes) has zero
    // spread; then equality must hold outright.
    report.pass = std::abs(report.empirical_mean - report.analytic) <=
                  std::max(3.0 * report.std_error, 1e-12 * report.analytic);
    return report;
}

PropositionReport validate_propositions(const SystemConfig& cfg, std::int64_t trials,
                                        std::uint64_t seed) {
    PropositionReport report;

    const McEstimate sd = estimate_snr(Scheme::SD, cfg, trials, seed);
    report.sd_mc = sd.mean_snr_linear;
    report.sd_std_error = sd.std_error;
    report.sd_analytic = analytic_snr(Scheme::SD, cfg).snr_linear;
    report.sd_ok = std::abs(report.sd_mc - report.sd_analytic) <= 3.0 * report.sd_std_error;

    const McEstimate scd = estimate_snr(Scheme::SCD, cfg, trials, seed);
    report.scd_mc = scd.mean_snr_linear;
    report.scd_std_error = scd.std_error;
    report.scd_analytic = analytic_snr(Scheme::SCD, cfg).snr_linear;
    report.scd_ok =
        std::abs(report.scd_mc - report.scd_analytic) <= 3.0 * report.scd_std_error;

    // Gain-proportional weights must reach the full coherent gain sum(p) and
    // dominate random simplex weightings.
    const std::vector<double> distances = cfg.waveguide_distances();
    std::vector<double> p;
    p.reserve(distances.size());
    double p_total = 0.0;
    for (double d : distances) {
        p.push_back(eta(cfg) * cfg.n_g / std::pow(d, cfg.beta));
        p_total += p.back();
    }
    const std::vector<double> w_opt = scd_waveguide_weights(p);
    const auto coherent_gain = [&](std::span<const double> w) {
        double amp = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) amp += std::sqrt(p[i] * w[i]);
        return amp * amp;
    };
    const double achieved = coherent_gain(w_opt);
    report.weights_ok = std::abs(achieved - p_total) <= 1e-12 * p_total;
    TrialRng wrng(seed ^ 0x5157ECC5ED620DEFULL, 0);
    std::vector<double> w(p.size());
    for (int i = 0; i < 1000 && report.weights_ok; ++i) {
        double total = 0.0;
        for (double& wi : w) {
            wi = -std::log(wrng.uniform_pos());
            total += wi;
        }
        for (double& wi : w) wi /= total;
        if (coherent_gain(w) > achieved * (1.0 + 1e-12)) report.weights_ok = false;
    }

    // The BS/PAS cross term of the SD channel gain averages to zero when the
    // waveguide phases are uniform.
    std::vector<double> amplitudes;
    amplitudes.reserve(distances.size());
    for (double d : distances) amplitudes.push_back(std::sqrt(1.0 / std::pow(d, cfg.beta)));
    const PowerAllocation pa = static_power_allocation(Scheme::SD, cfg);
    const double a_coef = std::sqrt(eta(cfg) * pa.bs_fraction / std::pow(cfg.l_b, cfg.alpha));
    const double b_coef = std::sqrt(eta(cfg) * cfg.n_g * pa.waveguide_fractions[0]);
    double s1 = 0.0, s2 = 0.0;
    std::vector<double> phases(amplitudes.size());
    for (std::int64_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, static_cast<std::uint64_t>(t));
        const BsChannel bs = sample_bs_channel(cfg, rng);
        std::complex<double> pas = 0.0;
        for (double& phi : phases) phi = rng.uniform(0.0, kTwoPi);
        for (std::size_t i = 0; i < amplitudes.size(); ++i)
            pas += std::polar(amplitudes[i], -phases[i]);
        const double cross = 2.0 * a_coef * bs.norm() * b_coef * pas.real();
        s1 += cross;
        s2 += cross * cross;
    }
    const double n = static_cast<double>(trials);
    report.cross_mean = s1 / n;
    const double var = std::max(0.0, (s2 - n * report.cross_mean * report.cross_mean) / (n - 1.0));
    report.cross_std_error = std::sqrt(var / n);
    report.cross_ok = std::abs(report.cross_mean) <= 3.0 * report.cross_std_error;

    return report;
}

} // namespace pinchlink
