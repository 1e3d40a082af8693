#include "pinchlink/scenario.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace pinchlink {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("invalid number for key '" + key + "': '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError("trailing characters in value for key '" + key + "': '" + value + "'");
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for key '" + key + "': '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError("trailing characters in value for key '" + key + "': '" + value + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("invalid unsigned integer for key '" + key + "': '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError("trailing characters in value for key '" + key + "': '" + value + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::istringstream in(value);
    std::vector<double> out;
    std::string token;
    while (in >> token) out.push_back(parse_double(key, token));
    if (out.empty()) throw ConfigError("empty list for key '" + key + "'");
    return out;
}

Point3 parse_point(const std::string& key, const std::string& value) {
    const std::vector<double> v = parse_double_list(key, value);
    if (v.size() != 3)
        throw ConfigError("key '" + key + "' expects three coordinates, got " +
                          std::to_string(v.size()));
    return {v[0], v[1], v[2]};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_point(const Point3& p) {
    return format_double(p.x) + " " + format_double(p.y) + " " + format_double(p.z);
}

struct WaveguideKeys {
    std::optional<Point3> feed;
    std::optional<Point3> reference;
    std::optional<Point3> axis_direction;
    std::optional<double> length_limit;
};

} // namespace

std::vector<double> Scenario::waveguide_distances() const {
    if (!cfg.l_g_list.empty()) return cfg.l_g_list;
    if (geometry) {
        std::vector<double> out;
        out.reserve(geometry->waveguides.size());
        for (const auto& wg : geometry->waveguides)
            out.push_back(distance(wg.reference_position, geometry->ue));
        return out;
    }
    return cfg.waveguide_distances();
}

Scenario parse_scenario(std::istream& in) {
    Scenario scenario;
    SystemConfig& cfg = scenario.cfg;
    std::optional<Point3> ue;
    std::map<int, WaveguideKeys> waveguides;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");

        if (key == "c") cfg.constants.c = parse_double(key, value);
        else if (key == "f_c") cfg.f_c = parse_double(key, value);
        else if (key == "n_eff") cfg.n_eff = parse_double(key, value);
        else if (key == "N_B") cfg.n_b = static_cast<int>(parse_int(key, value));
        else if (key == "K") cfg.k_waveguides = static_cast<int>(parse_int(key, value));
        else if (key == "N_G") cfg.n_g = static_cast<int>(parse_int(key, value));
        else if (key == "alpha") cfg.alpha = parse_double(key, value);
        else if (key == "beta") cfg.beta = parse_double(key, value);
        else if (key == "L_B") cfg.l_b = parse_double(key, value);
        else if (key == "L_G") cfg.l_g = parse_double(key, value);
        else if (key == "L_G_list") cfg.l_g_list = parse_double_list(key, value);
        else if (key == "P_t") cfg.p_t = parse_double(key, value);
        else if (key == "noise_density_dbm_hz") cfg.noise_density_dbm_hz = parse_double(key, value);
        else if (key == "bandwidth_hz") cfg.bandwidth_hz = parse_double(key, value);
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "trials") cfg.trials = parse_int(key, value);
        else if (key == "ue") ue = parse_point(key, value);
        else if (key.rfind("waveguide.", 0) == 0) {
            const std::string rest = key.substr(10);
            const auto dot = rest.find('.');
            if (dot == std::string::npos)
                throw ConfigError("malformed waveguide key '" + key + "'");
            const int index = static_cast<int>(parse_int(key, rest.substr(0, dot)));
            if (index < 1) throw ConfigError("waveguide indices start at 1");
            const std::string field = rest.substr(dot + 1);
            WaveguideKeys& wk = waveguides[index];
            if (field == "feed") wk.feed = parse_point(key, value);
            else if (field == "reference") wk.reference = parse_point(key, value);
            else if (field == "axis_direction") wk.axis_direction = parse_point(key, value);
            else if (field == "length_limit") wk.length_limit = parse_double(key, value);
            else throw ConfigError("unknown waveguide field '" + field + "'");
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    cfg.validate();

    if (ue || !waveguides.empty()) {
        if (!ue) throw ConfigError("geometry block requires a 'ue' position");
        if (static_cast<int>(waveguides.size()) != cfg.k_waveguides)
            throw ConfigError("geometry block must define exactly K waveguides");
        ScenarioGeometry geo;
        geo.ue = *ue;
        for (int k = 1; k <= cfg.k_waveguides; ++k) {
            const auto it = waveguides.find(k);
            if (it == waveguides.end())
                throw ConfigError("missing waveguide." + std::to_string(k) + " block");
            const WaveguideKeys& wk = it->second;
            if (!wk.feed || !wk.reference)
                throw ConfigError("waveguide." + std::to_string(k) +
                                  " needs feed and reference positions");
            const double limit = wk.length_limit.value_or(100.0);
            if (wk.axis_direction) {
                WaveguideSpec wg;
                wg.feed = *wk.feed;
                wg.axis_origin = *wk.feed;
                wg.axis_direction = *wk.axis_direction;
                wg.reference_position = *wk.reference;
                wg.length_limit = limit;
                wg.validate();
                geo.waveguides.push_back(wg);
            } else {
                geo.waveguides.push_back(make_waveguide(*wk.feed, *wk.reference, limit));
            }
        }
        scenario.geometry = geo;
    }
    return scenario;
}

Scenario parse_scenario_string(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Scenario scenario = parse_scenario(in);
    if (const char* env = std::getenv("PINCHLINK_SEED")) {
        scenario.cfg.seed = parse_u64("PINCHLINK_SEED", env);
    }
    return scenario;
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    const SystemConfig& cfg = s.cfg;
    out << "c = " << format_double(cfg.constants.c) << "\n";
    out << "f_c = " << format_double(cfg.f_c) << "\n";
    out << "n_eff = " << format_double(cfg.n_eff) << "\n";
    out << "N_B = " << cfg.n_b << "\n";
    out << "K = " << cfg.k_waveguides << "\n";
    out << "N_G = " << cfg.n_g << "\n";
    out << "alpha = " << format_double(cfg.alpha) << "\n";
    out << "beta = " << format_double(cfg.beta) << "\n";
    out << "L_B = " << format_double(cfg.l_b) << "\n";
    out << "L_G = " << format_double(cfg.l_g) << "\n";
    if (!cfg.l_g_list.empty()) {
        out << "L_G_list =";
        for (double d : cfg.l_g_list) out << " " << format_double(d);
        out << "\n";
    }
    out << "P_t = " << format_double(cfg.p_t) << "\n";
    out << "noise_density_dbm_hz = " << format_double(cfg.noise_density_dbm_hz) << "\n";
    out << "bandwidth_hz = " << format_double(cfg.bandwidth_hz) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "trials = " << cfg.trials << "\n";
    if (s.geometry) {
        out << "ue = " << format_point(s.geometry->ue) << "\n";
        for (std::size_t i = 0; i < s.geometry->waveguides.size(); ++i) {
            const WaveguideSpec& wg = s.geometry->waveguides[i];
            const std::string prefix = "waveguide." + std::to_string(i + 1) + ".";
            out << prefix << "feed = " << format_point(wg.feed) << "\n";
            out << prefix << "reference = " << format_point(wg.reference_position) << "\n";
            out << prefix << "axis_direction = " << format_point(wg.axis_direction) << "\n";
            out << prefix << "length_limit = " << format_double(wg.length_limit) << "\n";
        }
    }
    return out.str();
}

} // namespace pinchlink
