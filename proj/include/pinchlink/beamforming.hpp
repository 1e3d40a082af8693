#ifndef PINCHLINK_BEAMFORMING_HPP
#define PINCHLINK_BEAMFORMING_HPP

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pinchlink/channel.hpp"
#include "pinchlink/config.hpp"

namespace pinchlink {

enum class Scheme { BsOnly, SD, SCD, FCD };

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

/// All four schemes in their conventional order.
inline constexpr Scheme kAllSchemes[] = {Scheme::BsOnly, Scheme::SD, Scheme::SCD,
                                         Scheme::FCD};

/// Unit-norm transmit weight vector over the N_B + K RF ports.
struct Beamformer {
    Scheme scheme;
    std::vector<std::complex<double>> weights;

    double norm() const;
};

struct PowerAllocation {
    double bs_fraction = 0.0;
    std::vector<double> waveguide_fractions;

    double total() const;
};

/// RF-chain-proportional split for SD/SCD and the trivial BsOnly split.
/// SCD's waveguide pool is divided equally here; pass measured gains to
/// scd_waveguide_weights for the gain-proportional division. FCD is
/// rejected because its allocation is channel-dependent.
PowerAllocation static_power_allocation(Scheme scheme, const SystemConfig& cfg);

/// Gain-proportional waveguide power weights w_k = p_k / sum(p). The
/// resulting coherent gain (sum sqrt(p_k w_k))^2 equals sum(p_k), which is
/// the optimum of the simplex-constrained problem.
std::vector<double> scd_waveguide_weights(std::span<const double> gains);

Beamformer make_bs_only_beamformer(const BsChannel& bs, const SystemConfig& cfg);

Beamformer make_sd_beamformer(const BsChannel& bs, const SystemConfig& cfg);

/// SCD weights: MRT on the BS block, gain-proportional real weights on the
/// waveguide block. The waveguide phase rotation is realized physically by
/// antenna placement, so anchors must already be aligned (checked); with
/// strict_math the rotation exp(-j(phi_1 - phi_k)) is kept in the digital
/// weights instead and misaligned anchors are allowed.
Beamformer make_scd_beamformer(const BsChannel& bs, std::span<const double> waveguide_gains,
                               std::span<const double> anchors, const SystemConfig& cfg,
                               bool strict_math = false);

/// Full MRT over the joint channel: w = h^H / ||h||.
Beamformer make_fcd_beamformer(const JointChannel& h);

/// Long-run average power fractions under full MRT.
PowerAllocation fcd_average_power_ratios(const SystemConfig& cfg);
PowerAllocation fcd_average_power_ratios(const SystemConfig& cfg,
                                         std::span<const double> distances);

inline double received_snr(const JointChannel& h, const Beamformer& w,
                           const SystemConfig& cfg) {
    return received_snr(h, std::span<const std::complex<double>>(w.weights), cfg);
}

} // namespace pinchlink

#endif
