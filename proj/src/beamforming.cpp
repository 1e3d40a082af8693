#include "pinchlink/beamforming.hpp"

#include <cmath>
#include <numeric>

namespace pinchlink {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

double wrap_2pi(double phase) {
    double w = std::fmod(phase, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

double circular_distance(double a, double b) {
    const double d = wrap_2pi(a - b);
    return std::min(d, kTwoPi - d);
}
} // namespace

std::string_view scheme_name(Scheme s) {
    switch (s) {
    case Scheme::BsOnly: return "bs_only";
    case Scheme::SD: return "sd";
    case Scheme::SCD: return "scd";
    case Scheme::FCD: return "fcd";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "bs_only" || name == "bsonly" || name == "bo") return Scheme::BsOnly;
    if (name == "sd") return Scheme::SD;
    if (name == "scd") return Scheme::SCD;
    if (name == "fcd") return Scheme::FCD;
    return std::nullopt;
}

double Beamformer::norm() const {
    double s = 0.0;
    for (const auto& w : weights) s += std::norm(w);
    return std::sqrt(s);
}

double PowerAllocation::total() const {
    return bs_fraction +
           std::accumulate(waveguide_fractions.begin(), waveguide_fractions.end(), 0.0);
}

PowerAllocation static_power_allocation(Scheme scheme, const SystemConfig& cfg) {
    const double ports = static_cast<double>(cfg.n_b + cfg.k_waveguides);
    PowerAllocation pa;
    switch (scheme) {
    case Scheme::BsOnly:
        pa.bs_fraction = 1.0;
        pa.waveguide_fractions.assign(static_cast<std::size_t>(cfg.k_waveguides), 0.0);
        return pa;
    case Scheme::SD:
    case Scheme::SCD:
        pa.bs_fraction = cfg.n_b / ports;
        pa.waveguide_fractions.assign(static_cast<std::size_t>(cfg.k_waveguides),
                                      1.0 / ports);
        return pa;
    case Scheme::FCD:
        throw std::invalid_argument(
            "FCD power allocation is channel-dependent; use fcd_average_power_ratios");
    }
    throw std::invalid_argument("unknown scheme");
}

std::vector<double> scd_waveguide_weights(std::span<const double> gains) {
    double total = 0.0;
    for (double p : gains) {
        if (!(p > 0.0)) throw std::invalid_argument("waveguide gains must be positive");
        total += p;
    }
    std::vector<double> weights;
    weights.reserve(gains.size());
    for (double p : gains) weights.push_back(p / total);
    return weights;
}

Beamformer make_bs_only_beamformer(const BsChannel& bs, const SystemConfig& cfg) {
    const double n = bs.norm();
    if (!(n > 0.0)) throw std::invalid_argument("BS channel is zero");
    Beamformer w{Scheme::BsOnly, {}};
    w.weights.reserve(bs.coefficients.size() + static_cast<std::size_t>(cfg.k_waveguides));
    for (const auto& h : bs.coefficients) w.weights.push_back(std::conj(h) / n);
    w.weights.resize(bs.coefficients.size() + static_cast<std::size_t>(cfg.k_waveguides),
                     0.0);
    return w;
}

Beamformer make_sd_beamformer(const BsChannel& bs, const SystemConfig& cfg) {
    const double n = bs.norm();
    if (!(n > 0.0)) throw std::invalid_argument("BS channel is zero");
    const PowerAllocation pa = static_power_allocation(Scheme::SD, cfg);
    Beamformer w{Scheme::SD, {}};
    w.weights.reserve(bs.coefficients.size() + pa.waveguide_fractions.size());
    const double bs_scale = std::sqrt(pa.bs_fraction) / n;
    for (const auto& h : bs.coefficients) w.weights.push_back(bs_scale * std::conj(h));
    for (double f : pa.waveguide_fractions) w.weights.push_back(std::sqrt(f));
    return w;
}

Beamformer make_scd_beamformer(const BsChannel& bs, std::span<const double> waveguide_gains,
                               std::span<const double> anchors, const SystemConfig& cfg,
                               bool strict_math) {
    if (waveguide_gains.size() != anchors.size())
        throw std::invalid_argument("gain/anchor length mismatch");
    const double n = bs.norm();
    if (!(n > 0.0)) throw std::invalid_argument("BS channel is zero");
    if (!strict_math) {
        for (double phi : anchors)
            if (circular_distance(phi, anchors[0]) > kPhaseTolerance)
                throw std::invalid_argument(
                    "SCD requires placement-aligned anchors; run the alignment first");
    }
    const PowerAllocation pa = static_power_allocation(Scheme::SCD, cfg);
    const double pool = std::accumulate(pa.waveguide_fractions.begin(),
                                        pa.waveguide_fractions.end(), 0.0);
    const std::vector<double> weights = scd_waveguide_weights(waveguide_gains);

    Beamformer w{Scheme::SCD, {}};
    w.weights.reserve(bs.coefficients.size() + waveguide_gains.size());
    const double bs_scale = std::sqrt(pa.bs_fraction) / n;
    for (const auto& h : bs.coefficients) w.weights.push_back(bs_scale * std::conj(h));
    for (std::size_t k = 0; k < waveguide_gains.size(); ++k) {
        const double amplitude = std::sqrt(pool * weights[k]);
        if (strict_math)
            w.weights.push_back(std::polar(amplitude, -(anchors[0] - anchors[k])));
        else
            w.weights.push_back(amplitude);
    }
    return w;
}

Beamformer make_fcd_beamformer(const JointChannel& h) {
    const double n = h.norm();
    if (!(n > 0.0)) throw std::invalid_argument("joint channel is zero");
    Beamformer w{Scheme::FCD, {}};
    w.weights.reserve(h.vector.size());
    for (const auto& hi : h.vector) w.weights.push_back(std::conj(hi) / n);
    return w;
}

PowerAllocation fcd_average_power_ratios(const SystemConfig& cfg) {
    const std::vector<double> distances = cfg.waveguide_distances();
    return fcd_average_power_ratios(cfg, distances);
}

PowerAllocation fcd_average_power_ratios(const SystemConfig& cfg,
                                         std::span<const double> distances) {
    // Expected squared channel magnitudes per port group; eta cancels.
    const double bs_power = cfg.n_b / std::pow(cfg.l_b, cfg.alpha);
    std::vector<double> wg_power;
    wg_power.reserve(distances.size());
    double total = bs_power;
    for (double d : distances) {
        wg_power.push_back(cfg.n_g / std::pow(d, cfg.beta));
        total += wg_power.back();
    }
    PowerAllocation pa;
    pa.bs_fraction = bs_power / total;
    pa.waveguide_fractions.reserve(wg_power.size());
    for (double p : wg_power) pa.waveguide_fractions.push_back(p / total);
    return pa;
}

} // namespace pinchlink
