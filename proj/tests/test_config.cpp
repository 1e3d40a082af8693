#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "pinchlink/config.hpp"
#include "pinchlink/rng.hpp"
#include "pinchlink/scenario.hpp"

using namespace pinchlink;

namespace {

SystemConfig rounded_c_defaults() {
    SystemConfig cfg;
    cfg.constants.c = 3.0e8;
    return cfg;
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("wavelengths from the carrier frequency") {
    SystemConfig cfg = rounded_c_defaults();
    const Wavelengths wl = wavelengths(cfg);
    CHECK(wl.lambda == doctest::Approx(0.08571428571428572).epsilon(1e-14));
    CHECK(wl.lambda_g == doctest::Approx(0.05714285714285714).epsilon(1e-14));

    cfg.f_c = cfg.constants.c; // one-hertz-per-meter identity
    CHECK(wavelengths(cfg).lambda == doctest::Approx(1.0).epsilon(1e-15));

    SystemConfig si;
    CHECK(wavelengths(si).lambda == doctest::Approx(0.085654988).epsilon(1e-12));

    cfg.f_c = 0.0;
    CHECK_THROWS_AS(wavelengths(cfg), ConfigError);
    cfg.f_c = -1.0;
    CHECK_THROWS_AS(wavelengths(cfg), ConfigError);
}

TEST_CASE("eta gain constant") {
    SystemConfig cfg = rounded_c_defaults();
    CHECK(eta(cfg) == doctest::Approx(4.65250333051551e-05).epsilon(1e-13));

    SystemConfig si;
    CHECK(eta(si) == doctest::Approx(4.646068291545674e-05).epsilon(1e-13));

    // lambda = 4 pi makes the constant exactly one
    cfg.f_c = cfg.constants.c / (4.0 * M_PI);
    CHECK(eta(cfg) == doctest::Approx(1.0).epsilon(1e-12));

    cfg.f_c = 0.0;
    CHECK_THROWS_AS(eta(cfg), ConfigError);
}

TEST_CASE("eta is (lambda / 4pi)^2 for random configurations") {
    TrialRng rng(2024, 0);
    for (int i = 0; i < 200; ++i) {
        SystemConfig cfg;
        cfg.constants.c = (i % 2 == 0) ? 3.0e8 : 299792458.0;
        cfg.f_c = std::pow(10.0, rng.uniform(8.0, 11.0));
        const double lambda = wavelengths(cfg).lambda;
        const double product = eta(cfg) * (4.0 * M_PI / lambda) * (4.0 * M_PI / lambda);
        CHECK(product == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("noise power from PSD and bandwidth") {
    SystemConfig cfg;
    CHECK(noise_power(cfg) == doctest::Approx(1.0e-12).epsilon(1e-12)); // -170 dBm/Hz, 100 MHz

    cfg.noise_density_dbm_hz = -30.0;
    cfg.bandwidth_hz = 1.0;
    CHECK(noise_power(cfg) == doctest::Approx(1.0e-6).epsilon(1e-12));

    cfg.noise_density_dbm_hz = -170.0;
    CHECK(noise_power(cfg) == doctest::Approx(1.0e-20).epsilon(1e-12));

    cfg.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(noise_power(cfg), ConfigError);
}

TEST_CASE("transmit SNR at the default operating point is 120 dB") {
    SystemConfig cfg;
    CHECK(transmit_snr(cfg) == doctest::Approx(1.0e12).epsilon(1e-9));
    CHECK(to_db(transmit_snr(cfg)) == doctest::Approx(120.0).epsilon(1e-9));
}

TEST_CASE("parameter validation") {
    SystemConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    SystemConfig bad = cfg;
    bad.n_eff = 1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.k_waveguides = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.l_b = -5.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.l_g_list = {100.0, 100.0}; // K = 4, list of 2
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("waveguide distances default to the scalar and accept an override") {
    SystemConfig cfg;
    CHECK(cfg.waveguide_distances() == std::vector<double>{100.0, 100.0, 100.0, 100.0});
    cfg.l_g_list = {90.0, 100.0, 110.0, 120.0};
    CHECK(cfg.waveguide_distances() == cfg.l_g_list);
}

TEST_CASE("scenario parse and serialize round-trips every field exactly") {
    Scenario s;
    s.cfg.constants.c = 3.0e8;
    s.cfg.f_c = 3.5123e9;
    s.cfg.n_eff = 1.4142135623730951;
    s.cfg.n_b = 17;
    s.cfg.k_waveguides = 2;
    s.cfg.n_g = 5;
    s.cfg.alpha = 2.4000000000000004;
    s.cfg.beta = 2.1;
    s.cfg.l_b = 217.3;
    s.cfg.l_g = 99.9;
    s.cfg.l_g_list = {101.5, 98.25};
    s.cfg.p_t = 3.1622776601683795;
    s.cfg.noise_density_dbm_hz = -169.5;
    s.cfg.bandwidth_hz = 123.456e6;
    s.cfg.seed = 18446744073709551615ULL;
    s.cfg.trials = 4321;
    ScenarioGeometry geo;
    geo.ue = {30.0, 5.0, 0.0};
    geo.waveguides.push_back(make_waveguide({0, 0, 10}, {20, 0, 10}, 60.0));
    geo.waveguides.push_back(make_waveguide({0, 30, 10}, {20, 30, 10}, 60.0));
    s.geometry = geo;

    const std::string text = serialize_scenario(s);
    const Scenario back = parse_scenario_string(text);

    CHECK(back.cfg.constants.c == s.cfg.constants.c);
    CHECK(back.cfg.f_c == s.cfg.f_c);
    CHECK(back.cfg.n_eff == s.cfg.n_eff);
    CHECK(back.cfg.n_b == s.cfg.n_b);
    CHECK(back.cfg.k_waveguides == s.cfg.k_waveguides);
    CHECK(back.cfg.n_g == s.cfg.n_g);
    CHECK(back.cfg.alpha == s.cfg.alpha);
    CHECK(back.cfg.beta == s.cfg.beta);
    CHECK(back.cfg.l_b == s.cfg.l_b);
    CHECK(back.cfg.l_g == s.cfg.l_g);
    CHECK(back.cfg.l_g_list == s.cfg.l_g_list);
    CHECK(back.cfg.p_t == s.cfg.p_t);
    CHECK(back.cfg.noise_density_dbm_hz == s.cfg.noise_density_dbm_hz);
    CHECK(back.cfg.bandwidth_hz == s.cfg.bandwidth_hz);
    CHECK(back.cfg.seed == s.cfg.seed);
    CHECK(back.cfg.trials == s.cfg.trials);
    REQUIRE(back.geometry.has_value());
    CHECK(back.geometry->ue.x == geo.ue.x);
    CHECK(back.geometry->ue.y == geo.ue.y);
    CHECK(back.geometry->ue.z == geo.ue.z);
    REQUIRE(back.geometry->waveguides.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& a = back.geometry->waveguides[k];
        const auto& b = geo.waveguides[k];
        CHECK(a.feed.x == b.feed.x);
        CHECK(a.reference_position.x == b.reference_position.x);
        CHECK(a.reference_position.y == b.reference_position.y);
        CHECK(a.axis_direction.x == b.axis_direction.x);
        CHECK(a.length_limit == b.length_limit);
    }
    // Serialization is canonical: a second round trip is byte-identical.
    CHECK(serialize_scenario(back) == text);
}

TEST_CASE("unknown or malformed keys are hard errors") {
    CHECK_THROWS_AS(parse_scenario_string("N_b = 64\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_string("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_string("N_B 64\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_string("N_B =\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_string("N_B = sixty-four\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_string("N_B = 64x\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_string("waveguide.1.color = red\n"), ConfigError);
    CHECK_NOTHROW(parse_scenario_string("N_B = 32  # trailing comment\n"));
}

TEST_CASE("geometry block needs the UE and exactly K waveguides") {
    const char* missing_ue =
        "K = 1\n"
        "waveguide.1.feed = 0 0 10\n"
        "waveguide.1.reference = 20 0 10\n";
    CHECK_THROWS_AS(parse_scenario_string(missing_ue), ConfigError);

    const char* wrong_count =
        "K = 2\n"
        "ue = 30 5 0\n"
        "waveguide.1.feed = 0 0 10\n"
        "waveguide.1.reference = 20 0 10\n";
    CHECK_THROWS_AS(parse_scenario_string(wrong_count), ConfigError);

    const char* good =
        "K = 1\n"
        "ue = 30 5 0\n"
        "waveguide.1.feed = 0 0 10\n"
        "waveguide.1.reference = 20 0 10\n"
        "waveguide.1.length_limit = 42\n";
    const Scenario s = parse_scenario_string(good);
    REQUIRE(s.geometry.has_value());
    CHECK(s.geometry->waveguides[0].length_limit == 42.0);
    CHECK(s.waveguide_distances()[0] ==
          doctest::Approx(distance({20, 0, 10}, {30, 5, 0})).epsilon(1e-15));
}

TEST_CASE("PINCHLINK_SEED environment variable overrides the file seed") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "pinchlink_seed_test.cfg";
    {
        std::ofstream out(path);
        out << "seed = 7\n";
    }
    unsetenv("PINCHLINK_SEED");
    CHECK(load_scenario(path.string()).cfg.seed == 7);
    setenv("PINCHLINK_SEED", "99", 1);
    CHECK(load_scenario(path.string()).cfg.seed == 99);
    setenv("PINCHLINK_SEED", "not-a-number", 1);
    CHECK_THROWS_AS(load_scenario(path.string()), ConfigError);
    unsetenv("PINCHLINK_SEED");
    fs::remove(path);
}

} // TEST_SUITE
