#include "pinchlink/rng.hpp"

#include <cmath>

namespace pinchlink {

std::array<double, 2> TrialRng::normal_pair() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::complex<double> TrialRng::complex_normal() {
    const auto [a, b] = normal_pair();
    return {a * M_SQRT1_2, b * M_SQRT1_2};
}

} // namespace pinchlink
