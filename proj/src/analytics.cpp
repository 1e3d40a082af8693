#include "pinchlink/analytics.hpp"

#include <cmath>

namespace pinchlink {

double path_loss_ratio(const SystemConfig& cfg) {
    return std::pow(cfg.l_b, cfg.alpha) / std::pow(cfg.l_g, cfg.beta);
}

SnrReport analytic_snr(Scheme scheme, const SystemConfig& cfg,
                       std::span<const double> distances) {
    const double e = eta(cfg);
    const double gt = transmit_snr(cfg);
    const double nb = static_cast<double>(cfg.n_b);
    const double k = static_cast<double>(cfg.k_waveguides);
    const double ng = static_cast<double>(cfg.n_g);
    const double bs_gain = e * nb / std::pow(cfg.l_b, cfg.alpha);
    double inv_loss_sum = 0.0; // sum_k 1/L_k^beta
    for (double d : distances) inv_loss_sum += 1.0 / std::pow(d, cfg.beta);

    double mean_gain = 0.0;
    switch (scheme) {
    case Scheme::BsOnly:
        mean_gain = bs_gain;
        break;
    case Scheme::SD:
        mean_gain = bs_gain * nb / (nb + k) + e * ng / (nb + k) * inv_loss_sum;
        break;
    case Scheme::SCD:
        mean_gain = bs_gain * nb / (nb + k) + e * ng * k / (nb + k) * inv_loss_sum;
        break;
    case Scheme::FCD:
        mean_gain = bs_gain + e * ng * inv_loss_sum;
        break;
    }
    const double snr = mean_gain * gt;
    return {scheme, snr, to_db(snr)};
}

SnrReport analytic_snr(Scheme scheme, const SystemConfig& cfg) {
    const std::vector<double> distances = cfg.waveguide_distances();
    return analytic_snr(scheme, cfg, distances);
}

GainReport gain_ratios(const SystemConfig& cfg) {
    const double nb = static_cast<double>(cfg.n_b);
    const double k = static_cast<double>(cfg.k_waveguides);
    const double ng = static_cast<double>(cfg.n_g);
    const double r = path_loss_ratio(cfg);

    GainReport g;
    g.v_sd = nb / (nb + k) + ng * k * r / (nb * (nb + k));
    g.v_scd = nb / (nb + k) + ng * k * k * r / (nb * (nb + k));
    g.v_fcd = 1.0 + ng * k * r / nb;

    // Break-even points of V = 1: path-loss ratio N_B/N_G for SD and
    // N_B/(N_G K) for SCD, solved for alpha and for N_G respectively.
    const double lg_beta = std::pow(cfg.l_g, cfg.beta);
    g.thresholds.alpha_sd = std::log(nb * lg_beta / ng) / std::log(cfg.l_b);
    g.thresholds.alpha_scd = std::log(nb * lg_beta / (ng * k)) / std::log(cfg.l_b);
    g.thresholds.ng_sd = nb * lg_beta / std::pow(cfg.l_b, cfg.alpha);
    g.thresholds.ng_scd = g.thresholds.ng_sd / k;
    return g;
}

AsymptoticRatios asymptotic_ratios(const SystemConfig& cfg) {
    const double nb = static_cast<double>(cfg.n_b);
    const double k = static_cast<double>(cfg.k_waveguides);
    const double ng = static_cast<double>(cfg.n_g);
    const double r = path_loss_ratio(cfg);
    AsymptoticRatios a;
    a.scd_over_sd_limit = k;
    a.fcd_over_scd_limit = 1.0 + nb / k;
    a.fcd_over_scd_exact = 1.0 + (nb * k + nb * k * ng * r) / (nb * nb + k * k * ng * r);
    return a;
}

} // namespace pinchlink
