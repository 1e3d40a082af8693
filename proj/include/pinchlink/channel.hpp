#ifndef PINCHLINK_CHANNEL_HPP
#define PINCHLINK_CHANNEL_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "pinchlink/config.hpp"
#include "pinchlink/geometry.hpp"
#include "pinchlink/rng.hpp"

namespace pinchlink {

class IncoherentPlacement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rayleigh-faded BS-UE channel: unit-variance coefficients plus the
/// large-scale amplitude sqrt(eta / L_B^alpha).
struct BsChannel {
    std::vector<std::complex<double>> coefficients;
    double scale = 0.0;

    double norm() const;  // Euclidean norm of the unnormalized coefficients
    double norm2() const; // squared norm
};

/// Aggregate downlink channel: N_B faded BS entries followed by K
/// deterministic waveguide entries gain_k * exp(-j phi_k).
struct JointChannel {
    BsChannel bs;
    std::vector<double> waveguide_gains;
    std::vector<double> waveguide_phases;
    std::vector<std::complex<double>> vector;

    double norm() const;
};

BsChannel sample_bs_channel(const SystemConfig& cfg, TrialRng& rng);

/// Equivalent RF-port channel of one waveguide. The coherent sum over the
/// placed antennas collapses to sqrt(eta N_G / L^beta) * exp(-j anchor);
/// throws IncoherentPlacement if the placement phases are not congruent.
std::complex<double> waveguide_channel(const PlacementResult& placement,
                                       double distance, const SystemConfig& cfg);

JointChannel joint_channel(const BsChannel& bs,
                           const std::vector<std::complex<double>>& waveguide_channels,
                           const SystemConfig& cfg);

/// Builds the joint channel directly from waveguide gains and phase anchors.
JointChannel joint_channel_from_anchors(const BsChannel& bs,
                                        std::span<const double> gains,
                                        std::span<const double> anchors,
                                        const SystemConfig& cfg);

/// Instantaneous received SNR |h w|^2 P_t / sigma_n^2 for a unit-norm weight
/// vector. Rejects weights whose norm deviates from 1 by more than 1e-9.
double received_snr(const JointChannel& h, std::span<const std::complex<double>> weights,
                    const SystemConfig& cfg);

} // namespace pinchlink

#endif
