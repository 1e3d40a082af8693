#ifndef PINCHLINK_CONFIG_HPP
#define PINCHLINK_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinchlink {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PhysicalConstants {
    // Exact SI value by default; set to 3.0e8 to match rounded textbook numbers.
    double c = 299792458.0;
};

/// Scalar parameters of the link model. Units: Hz, m, W, dBm/Hz.
/// All internal math is linear; dB(m) appears only at I/O boundaries.
struct SystemConfig {
    double f_c = 3.5e9;                   // carrier frequency
    double n_eff = 1.5;                   // effective refractive index of the waveguide
    int n_b = 64;                         // BS antenna count
    int k_waveguides = 4;                 // number of waveguides
    int n_g = 8;                          // pinching antennas per waveguide
    double alpha = 2.4;                   // BS-UE path-loss exponent
    double beta = 2.0;                    // PAS-UE path-loss exponent
    double l_b = 200.0;                   // BS-UE distance
    double l_g = 100.0;                   // default reference-antenna-to-UE distance
    std::vector<double> l_g_list;         // optional per-waveguide override (size K)
    double p_t = 1.0;                     // total transmit power
    double noise_density_dbm_hz = -170.0; // noise PSD
    double bandwidth_hz = 100e6;          // system bandwidth
    std::uint64_t seed = 1;               // RNG seed
    std::int64_t trials = 10000;          // Monte-Carlo trial count
    PhysicalConstants constants;

    /// Throws ConfigError on invalid parameter combinations.
    void validate() const;

    /// Per-waveguide reference-antenna distances: l_g_list if set, else K copies of l_g.
    std::vector<double> waveguide_distances() const;
};

struct Wavelengths {
    double lambda;   // free-space wavelength c/f_c
    double lambda_g; // in-guide wavelength lambda/n_eff
};

Wavelengths wavelengths(const SystemConfig& cfg);

/// Isotropic-antenna gain constant c^2/(16 pi^2 f_c^2) = (lambda/4pi)^2.
double eta(const SystemConfig& cfg);

/// Noise power in watts from PSD and bandwidth.
double noise_power(const SystemConfig& cfg);

/// Transmit SNR P_t / noise power (linear).
double transmit_snr(const SystemConfig& cfg);

double to_db(double linear);
double from_db(double db);

} // namespace pinchlink

#endif
