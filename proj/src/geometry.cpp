#include "pinchlink/geometry.hpp"

#include <cmath>
#include <string>

namespace pinchlink {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kOnAxisTol = 1e-9;     // meters
constexpr double kRefineTol = 1e-9;     // radians, bisection stop

double wrap_2pi(double phase) {
    double w = std::fmod(phase, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

Point3 sub(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

/// Unwrapped phase along the waveguide as a function of the axis coordinate.
/// The in-guide slope 2pi/lambda_G exceeds the free-space slope bound
/// 2pi/lambda whenever n_eff > 1, so the profile is strictly increasing in
/// the distance from the feed. That makes every bracketed solve unique.
class PhaseProfile {
public:
    PhaseProfile(const WaveguideSpec& wg, const Point3& ue, const SystemConfig& cfg)
        : wg_(wg), ue_(ue) {
        const Wavelengths wl = wavelengths(cfg);
        k_free_ = kTwoPi / wl.lambda;
        k_guide_ = kTwoPi / wl.lambda_g;
        step_ = wl.lambda_g / 20.0;
        t_feed_ = wg.coordinate_of(wg.feed);
        t_max_ = t_feed_ + wg.length_limit;
    }

    double at(double t) const {
        return k_free_ * distance(wg_.point_at(t), ue_) + k_guide_ * (t - t_feed_);
    }

    double t_feed() const { return t_feed_; }
    double t_max() const { return t_max_; }

    /// Solves at(t) == target starting from t0 (which must bracket in the
    /// implied direction). Returns the coordinate, or NaN when the solution
    /// falls outside the feasible segment [t_feed, t_max].
    double solve(double t0, double target) const {
        const bool rightward = target >= at(t0);
        double lo = t0;
        double hi = t0;
        if (rightward) {
            while (at(hi) < target) {
                lo = hi;
                hi += step_;
                if (hi > t_max_ + step_) {
                    if (at(t_max_) < target) return std::nan("");
                    hi = t_max_;
                    break;
                }
            }
        } else {
            while (at(lo) > target) {
                hi = lo;
                lo -= step_;
                if (lo < t_feed_ - step_) {
                    if (at(t_feed_) > target) return std::nan("");
                    lo = t_feed_;
                    break;
                }
            }
        }
        // Bisection on the monotone profile.
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double err = at(mid) - target;
            if (std::abs(err) <= kRefineTol || (hi - lo) < 1e-15) {
                return std::min(std::max(mid, t_feed_), t_max_);
            }
            if (err < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

private:
    const WaveguideSpec& wg_;
    Point3 ue_;
    double k_free_ = 0.0;
    double k_guide_ = 0.0;
    double step_ = 0.0;
    double t_feed_ = 0.0;
    double t_max_ = 0.0;
};

} // namespace

double distance(const Point3& a, const Point3& b) { return norm(sub(a, b)); }

void WaveguideSpec::validate() const {
    if (std::abs(norm(axis_direction) - 1.0) > 1e-9)
        throw ConfigError("waveguide axis_direction must be a unit vector");
    const auto off_axis = [&](const Point3& p) {
        const Point3 d = sub(p, axis_origin);
        const double along = dot(d, axis_direction);
        const Point3 perp = {d.x - along * axis_direction.x, d.y - along * axis_direction.y,
                             d.z - along * axis_direction.z};
        return norm(perp);
    };
    if (off_axis(feed) > kOnAxisTol)
        throw ConfigError("waveguide feed must lie on the axis");
    if (off_axis(reference_position) > kOnAxisTol)
        throw ConfigError("waveguide reference antenna must lie on the axis");
    if (!(length_limit > 0.0)) throw ConfigError("waveguide length_limit must be positive");
    const double s = coordinate_of(reference_position) - coordinate_of(feed);
    if (s < -kOnAxisTol || s > length_limit + kOnAxisTol)
        throw ConfigError("reference antenna must sit within [0, length_limit] of the feed");
}

double WaveguideSpec::coordinate_of(const Point3& p) const {
    return dot(sub(p, axis_origin), axis_direction);
}

Point3 WaveguideSpec::point_at(double s) const {
    return {axis_origin.x + s * axis_direction.x, axis_origin.y + s * axis_direction.y,
            axis_origin.z + s * axis_direction.z};
}

WaveguideSpec make_waveguide(const Point3& feed, const Point3& reference,
                             double length_limit) {
    const Point3 d = sub(reference, feed);
    const double n = norm(d);
    if (n < 1e-12)
        throw ConfigError("waveguide reference must not coincide with the feed");
    WaveguideSpec wg;
    wg.feed = feed;
    wg.axis_origin = feed;
    wg.axis_direction = {d.x / n, d.y / n, d.z / n};
    wg.reference_position = reference;
    wg.length_limit = length_limit;
    wg.validate();
    return wg;
}

double phase_delay(const Point3& antenna, const Point3& feed, const Point3& ue,
                   const SystemConfig& cfg) {
    const Wavelengths wl = wavelengths(cfg);
    return kTwoPi / wl.lambda * distance(antenna, ue) +
           kTwoPi / wl.lambda_g * distance(antenna, feed);
}

PlacementResult place_intra_waveguide(const WaveguideSpec& wg, const Point3& ue,
                                      const SystemConfig& cfg) {
    wg.validate();
    const PhaseProfile profile(wg, ue, cfg);
    const double t_ref = wg.coordinate_of(wg.reference_position);
    const double psi_ref = profile.at(t_ref);

    PlacementResult result;
    result.positions.reserve(static_cast<std::size_t>(cfg.n_g));
    result.unwrapped_phases.reserve(static_cast<std::size_t>(cfg.n_g));
    result.integer_offsets.reserve(static_cast<std::size_t>(cfg.n_g));
    result.positions.push_back(wg.reference_position);
    result.unwrapped_phases.push_back(psi_ref);
    result.integer_offsets.push_back(0);
    result.phase_anchor = wrap_2pi(psi_ref);

    double t_prev = t_ref;
    for (int n = 1; n < cfg.n_g; ++n) {
        const double target = psi_ref + kTwoPi * n;
        const double t_n = profile.solve(t_prev, target);
        if (std::isnan(t_n))
            throw PlacementInfeasible("waveguide too short for " + std::to_string(cfg.n_g) +
                                      " phase-coherent antennas");
        result.positions.push_back(wg.point_at(t_n));
        result.unwrapped_phases.push_back(profile.at(t_n));
        result.integer_offsets.push_back(n);
        t_prev = t_n;
    }
    return result;
}

Point3 nearest_phase_position(const WaveguideSpec& wg, const Point3& ue,
                              double target_phase, const SystemConfig& cfg) {
    wg.validate();
    const PhaseProfile profile(wg, ue, cfg);
    const double t_ref = wg.coordinate_of(wg.reference_position);
    const double phi_ref = profile.at(t_ref);

    const double ahead = wrap_2pi(target_phase - phi_ref);
    if (ahead < kPhaseTolerance || kTwoPi - ahead < kPhaseTolerance)
        return wg.reference_position;

    const double t_right = profile.solve(t_ref, phi_ref + ahead);
    const double t_left = profile.solve(t_ref, phi_ref - (kTwoPi - ahead));
    const bool right_ok = !std::isnan(t_right);
    const bool left_ok = !std::isnan(t_left);
    if (!right_ok && !left_ok)
        throw PlacementInfeasible("no phase-congruent position on either side");
    if (!left_ok) return wg.point_at(t_right);
    if (!right_ok) return wg.point_at(t_left);
    const double d_left = t_ref - t_left;
    const double d_right = t_right - t_ref;
    return d_left >= d_right ? wg.point_at(t_right) : wg.point_at(t_left);
}

std::vector<PlacementResult> align_scd(const std::vector<WaveguideSpec>& waveguides,
                                       const Point3& ue, const SystemConfig& cfg) {
    std::vector<PlacementResult> results;
    results.reserve(waveguides.size());
    for (std::size_t k = 0; k < waveguides.size(); ++k) {
        if (k == 0) {
            results.push_back(place_intra_waveguide(waveguides[0], ue, cfg));
            continue;
        }
        WaveguideSpec adjusted = waveguides[k];
        adjusted.reference_position =
            nearest_phase_position(waveguides[k], ue, results[0].phase_anchor, cfg);
        results.push_back(place_intra_waveguide(adjusted, ue, cfg));
    }
    return results;
}

std::vector<PlacementResult> align_fcd(const std::vector<WaveguideSpec>& waveguides,
                                       const Point3& ue, const SystemConfig& cfg) {
    std::vector<PlacementResult> results;
    results.reserve(waveguides.size());
    for (const WaveguideSpec& wg : waveguides) {
        WaveguideSpec adjusted = wg;
        adjusted.reference_position = nearest_phase_position(wg, ue, 0.0, cfg);
        results.push_back(place_intra_waveguide(adjusted, ue, cfg));
    }
    return results;
}

} // namespace pinchlink
