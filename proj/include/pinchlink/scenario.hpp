#ifndef PINCHLINK_SCENARIO_HPP
#define PINCHLINK_SCENARIO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pinchlink/config.hpp"
#include "pinchlink/geometry.hpp"

namespace pinchlink {

/// Optional scenario geometry: UE position plus one waveguide per RF port.
struct ScenarioGeometry {
    Point3 ue;
    std::vector<WaveguideSpec> waveguides;
};

struct Scenario {
    SystemConfig cfg;
    std::optional<ScenarioGeometry> geometry;

    /// Reference-antenna-to-UE distances: geometry-derived when a geometry
    /// block is present, otherwise the configured scalar/list.
    std::vector<double> waveguide_distances() const;
};

/// Parses the flat key = value scenario format. Unknown keys are a hard
/// error. The PINCHLINK_SEED environment variable, when set, overrides the
/// seed from the file.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_string(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Canonical serialization; parse(serialize(s)) reproduces every field
/// exactly (doubles are written with 17 significant digits).
std::string serialize_scenario(const Scenario& s);

} // namespace pinchlink

#endif
