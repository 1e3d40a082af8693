#include "pinchlink/config.hpp"

#include <cmath>

namespace pinchlink {

void SystemConfig::validate() const {
    if (!(constants.c > 0.0)) throw ConfigError("speed of light must be positive");
    if (!(f_c > 0.0)) throw ConfigError("carrier frequency f_c must be positive");
    if (!(n_eff > 1.0)) throw ConfigError("effective refractive index n_eff must exceed 1");
    if (n_b < 1) throw ConfigError("N_B must be at least 1");
    if (k_waveguides < 1) throw ConfigError("K must be at least 1");
    if (n_g < 1) throw ConfigError("N_G must be at least 1");
    if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
    if (!(beta > 0.0)) throw ConfigError("beta must be positive");
    if (!(l_b > 0.0)) throw ConfigError("L_B must be positive");
    if (!(l_g > 0.0)) throw ConfigError("L_G must be positive");
    if (!l_g_list.empty()) {
        if (static_cast<int>(l_g_list.size()) != k_waveguides)
            throw ConfigError("L_G_list must have exactly K entries");
        for (double d : l_g_list)
            if (!(d > 0.0)) throw ConfigError("L_G_list entries must be positive");
    }
    if (!(p_t > 0.0)) throw ConfigError("P_t must be positive");
    if (!(bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz must be positive");
    if (trials < 1) throw ConfigError("trials must be at least 1");
}

std::vector<double> SystemConfig::waveguide_distances() const {
    if (!l_g_list.empty()) return l_g_list;
    return std::vector<double>(static_cast<std::size_t>(k_waveguides), l_g);
}

Wavelengths wavelengths(const SystemConfig& cfg) {
    if (!(cfg.f_c > 0.0)) throw ConfigError("carrier frequency f_c must be positive");
    const double lambda = cfg.constants.c / cfg.f_c;
    return {lambda, lambda / cfg.n_eff};
}

double eta(const SystemConfig& cfg) {
    if (!(cfg.f_c > 0.0)) throw ConfigError("carrier frequency f_c must be positive");
    const double c = cfg.constants.c;
    return (c * c) / (16.0 * M_PI * M_PI * cfg.f_c * cfg.f_c);
}

double noise_power(const SystemConfig& cfg) {
    if (!(cfg.bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz must be positive");
    const double psd_w_per_hz = std::pow(10.0, (cfg.noise_density_dbm_hz - 30.0) / 10.0);
    return psd_w_per_hz * cfg.bandwidth_hz;
}

double transmit_snr(const SystemConfig& cfg) { return cfg.p_t / noise_power(cfg); }

double to_db(double linear) { return 10.0 * std::log10(linear); }

double from_db(double db) { return std::pow(10.0, db / 10.0); }

} // namespace pinchlink
