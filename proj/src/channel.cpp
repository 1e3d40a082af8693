#include "pinchlink/channel.hpp"

#include <cmath>

namespace pinchlink {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

double wrap_2pi(double phase) {
    double w = std::fmod(phase, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}
} // namespace

double BsChannel::norm2() const {
    double s = 0.0;
    for (const auto& h : coefficients) s += std::norm(h);
    return s;
}

double BsChannel::norm() const { return std::sqrt(norm2()); }

double JointChannel::norm() const {
    double s = 0.0;
    for (const auto& h : vector) s += std::norm(h);
    return std::sqrt(s);
}

BsChannel sample_bs_channel(const SystemConfig& cfg, TrialRng& rng) {
    BsChannel ch;
    ch.coefficients.resize(static_cast<std::size_t>(cfg.n_b));
    for (auto& h : ch.coefficients) h = rng.complex_normal();
    ch.scale = std::sqrt(eta(cfg) / std::pow(cfg.l_b, cfg.alpha));
    return ch;
}

std::complex<double> waveguide_channel(const PlacementResult& placement, double distance,
                                       const SystemConfig& cfg) {
    if (placement.positions.empty())
        throw IncoherentPlacement("placement holds no antennas");
    for (double psi : placement.unwrapped_phases) {
        const double err = wrap_2pi(psi - placement.phase_anchor);
        if (std::min(err, kTwoPi - err) > kPhaseTolerance)
            throw IncoherentPlacement("placement phases are not congruent with the anchor");
    }
    const double n_g = static_cast<double>(placement.positions.size());
    const double gain = std::sqrt(eta(cfg) * n_g / std::pow(distance, cfg.beta));
    return std::polar(gain, -placement.phase_anchor);
}

JointChannel joint_channel(const BsChannel& bs,
                           const std::vector<std::complex<double>>& waveguide_channels,
                           const SystemConfig& cfg) {
    if (static_cast<int>(waveguide_channels.size()) != cfg.k_waveguides &&
        !(waveguide_channels.empty() && cfg.k_waveguides == 0))
        throw std::invalid_argument("expected exactly K waveguide channel entries");
    JointChannel h;
    h.bs = bs;
    h.waveguide_gains.reserve(waveguide_channels.size());
    h.waveguide_phases.reserve(waveguide_channels.size());
    h.vector.reserve(bs.coefficients.size() + waveguide_channels.size());
    for (const auto& c : bs.coefficients) h.vector.push_back(bs.scale * c);
    for (const auto& g : waveguide_channels) {
        h.waveguide_gains.push_back(std::abs(g));
        h.waveguide_phases.push_back(wrap_2pi(-std::arg(g)));
        h.vector.push_back(g);
    }
    return h;
}

JointChannel joint_channel_from_anchors(const BsChannel& bs, std::span<const double> gains,
                                        std::span<const double> anchors,
                                        const SystemConfig& cfg) {
    if (gains.size() != anchors.size())
        throw std::invalid_argument("gain/anchor length mismatch");
    std::vector<std::complex<double>> entries;
    entries.reserve(gains.size());
    for (std::size_t k = 0; k < gains.size(); ++k)
        entries.push_back(std::polar(gains[k], -anchors[k]));
    return joint_channel(bs, entries, cfg);
}

double received_snr(const JointChannel& h, std::span<const std::complex<double>> weights,
                    const SystemConfig& cfg) {
    if (weights.size() != h.vector.size())
        throw std::invalid_argument("beamformer length does not match the channel");
    double w_norm2 = 0.0;
    for (const auto& w : weights) w_norm2 += std::norm(w);
    if (std::abs(std::sqrt(w_norm2) - 1.0) > 1e-9)
        throw std::invalid_argument("beamformer must have unit norm");
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) acc += h.vector[i] * weights[i];
    return std::norm(acc) * cfg.p_t / noise_power(cfg);
}

} // namespace pinchlink
