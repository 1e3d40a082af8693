#ifndef PINCHLINK_GEOMETRY_HPP
#define PINCHLINK_GEOMETRY_HPP

#include <stdexcept>
#include <vector>

#include "pinchlink/config.hpp"

namespace pinchlink {

class PlacementInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const Point3& a, const Point3& b);

/// Phase congruences are considered satisfied below this tolerance (radians).
inline constexpr double kPhaseTolerance = 1e-6;

/// A feed-driven waveguide segment. Antennas live on the ray starting at the
/// feed and running along axis_direction, up to length_limit meters away.
struct WaveguideSpec {
    Point3 feed;
    Point3 axis_origin;
    Point3 axis_direction; // unit vector
    Point3 reference_position;
    double length_limit = 100.0;

    void validate() const;

    /// Signed coordinate of an on-axis point relative to axis_origin.
    double coordinate_of(const Point3& p) const;
    Point3 point_at(double s) const;
};

/// Convenience constructor: axis runs from feed through reference.
WaveguideSpec make_waveguide(const Point3& feed, const Point3& reference,
                             double length_limit = 100.0);

struct PlacementResult {
    std::vector<Point3> positions;        // first entry is the reference antenna
    std::vector<double> unwrapped_phases; // total propagation phase per antenna
    std::vector<long> integer_offsets;    // whole turns relative to the reference
    double phase_anchor = 0.0;            // reference phase mod 2pi, in [0, 2pi)
};

/// Total propagation phase (unwrapped, radians): free-space leg at the
/// carrier wavelength plus the in-guide leg at the guided wavelength.
double phase_delay(const Point3& antenna, const Point3& feed, const Point3& ue,
                   const SystemConfig& cfg);

/// Places N_G antennas on the waveguide, all phase-congruent with the
/// reference, marching away from the feed so the cluster stays near the
/// point closest to the UE. Throws PlacementInfeasible if the waveguide is
/// too short.
PlacementResult place_intra_waveguide(const WaveguideSpec& wg, const Point3& ue,
                                      const SystemConfig& cfg);

/// Nearest on-axis point to the current reference whose phase is congruent
/// with target_phase (mod 2pi). Searches both directions; on a tie the
/// candidate in +axis_direction wins.
Point3 nearest_phase_position(const WaveguideSpec& wg, const Point3& ue,
                              double target_phase, const SystemConfig& cfg);

/// Aligns waveguides 2..K to the first waveguide's phase anchor by moving
/// their reference antennas, then fills in the remaining antennas everywhere.
std::vector<PlacementResult> align_scd(const std::vector<WaveguideSpec>& waveguides,
                                       const Point3& ue, const SystemConfig& cfg);

/// Moves every reference antenna to the nearest zero-phase point (anchor
/// congruent to 0 mod 2pi), then fills in the remaining antennas.
std::vector<PlacementResult> align_fcd(const std::vector<WaveguideSpec>& waveguides,
                                       const Point3& ue, const SystemConfig& cfg);

} // namespace pinchlink

#endif
