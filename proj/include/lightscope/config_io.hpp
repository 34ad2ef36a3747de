#pragma once

// Plain-text `key = value` configuration files. Lengths are in units of d;
// '#' starts a comment; unknown or repeated keys are errors.
//
//   slit_width        = 0.01
//   screen_distance   = 10
//   photon_wavelength = 0.1
//   atom_de_broglie   = 0.004
//   grid_span         = 6      # half-width of the detector grid
//   grid_points       = 6001

#include <lightscope/apparatus.hpp>
#include <lightscope/errors.hpp>

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace lightscope {

struct FileConfig {
    ApparatusConfig apparatus;
    std::optional<double> grid_span;
    std::optional<std::size_t> grid_points;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& text, int line) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("line " + std::to_string(line) + ": '" + key +
                          "' expects a number, got '" + text + "'");
    }
    return v;
}

}  // namespace detail

inline FileConfig parse_config(std::istream& in) {
    FileConfig out;
    std::set<std::string> seen;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string text = detail::trim(raw);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        }
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string value = detail::trim(text.substr(eq + 1));
        if (!seen.insert(key).second) {
            throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + key + "'");
        }
        const double v = detail::parse_double(key, value, line);
        if (key == "slit_width") {
            out.apparatus.slit_width = v;
        } else if (key == "screen_distance") {
            out.apparatus.screen_distance = v;
        } else if (key == "photon_wavelength") {
            out.apparatus.photon_wavelength = v;
        } else if (key == "atom_de_broglie") {
            out.apparatus.atom_de_broglie = v;
        } else if (key == "grid_span") {
            out.grid_span = v;
        } else if (key == "grid_points") {
            if (v < 1.0 || v != std::floor(v)) {
                throw ConfigError("line " + std::to_string(line) +
                                  ": grid_points must be a positive integer");
            }
            out.grid_points = static_cast<std::size_t>(v);
        } else {
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    return out;
}

inline FileConfig parse_config(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

inline FileConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_config(in);
}

}  // namespace lightscope
