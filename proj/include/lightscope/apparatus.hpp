#pragma once

// Geometry of the two-slit light microscope. All lengths are in units of the
// slit separation d, with hbar = 1 so that p0 = 2*pi / lambda_dB and
// k = 2*pi / lambda.

#include <lightscope/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace lightscope {

struct ApparatusConfig {
    double slit_separation = 1.0;
    double slit_width = 0.01;
    double screen_distance = 10.0;
    double photon_wavelength = 0.1;
    double atom_de_broglie = 1.0 / 250.0;

    /// Longitudinal atom momentum p0 (hbar = 1).
    double atom_momentum() const { return 2.0 * std::numbers::pi / atom_de_broglie; }
    double photon_wavenumber() const { return 2.0 * std::numbers::pi / photon_wavelength; }
    /// Two-narrow-slit fringe period lambda_dB * L / d.
    double fringe_period() const { return atom_de_broglie * screen_distance / slit_separation; }

    bool operator==(const ApparatusConfig&) const = default;
};

/// Default apparatus with photon wavelength `lambda` (units of d).
inline ApparatusConfig default_config(double lambda = 0.1) {
    ApparatusConfig c;
    c.photon_wavelength = lambda;
    return c;
}

struct RegimePolicy {
    /// Downgrade the point-source and high-momentum checks to warnings.
    bool allow_override = false;
};

/// Every regime inequality the configuration breaks; empty when valid.
inline std::vector<Violation> check_regime(const ApparatusConfig& c) {
    std::vector<Violation> out;
    auto positive = [&](const char* name, double v) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            out.push_back({"positivity", name, v, "0", 0.0, false});
        }
    };
    positive("slit_separation", c.slit_separation);
    positive("slit_width", c.slit_width);
    positive("screen_distance", c.screen_distance);
    positive("photon_wavelength", c.photon_wavelength);
    positive("atom_de_broglie", c.atom_de_broglie);
    if (!out.empty()) {
        return out;
    }
    if (c.slit_width >= c.slit_separation) {
        out.push_back({"disjoint slits", "slit_separation", c.slit_separation, "slit_width",
                       c.slit_width, false});
    }
    if (c.photon_wavelength < 10.0 * c.slit_width) {
        out.push_back({"point-source", "photon_wavelength", c.photon_wavelength, "10*slit_width",
                       10.0 * c.slit_width, true});
    }
    if (c.photon_wavelength < 10.0 * c.atom_de_broglie) {
        out.push_back({"high-momentum", "photon_wavelength", c.photon_wavelength,
                       "10*atom_de_broglie", 10.0 * c.atom_de_broglie, true});
    }
    return out;
}

class ValidatedConfig;
ValidatedConfig validate(const ApparatusConfig& config, RegimePolicy policy = {});

/// A configuration that has passed `validate`. Immutable.
class ValidatedConfig {
public:
    const ApparatusConfig& get() const noexcept { return config_; }
    const ApparatusConfig* operator->() const noexcept { return &config_; }
    /// Violations that were downgraded by an override.
    const std::vector<Violation>& waived() const noexcept { return waived_; }

private:
    friend ValidatedConfig validate(const ApparatusConfig&, RegimePolicy);
    ValidatedConfig(ApparatusConfig c, std::vector<Violation> waived)
        : config_(c), waived_(std::move(waived)) {}

    ApparatusConfig config_;
    std::vector<Violation> waived_;
};

inline ValidatedConfig validate(const ApparatusConfig& config, RegimePolicy policy) {
    auto violations = check_regime(config);
    std::vector<Violation> hard;
    std::vector<Violation> waived;
    for (auto& v : violations) {
        (policy.allow_override && v.overridable ? waived : hard).push_back(v);
    }
    if (!hard.empty()) {
        throw RegimeViolation(std::move(hard));
    }
    return ValidatedConfig(config, std::move(waived));
}

/// Uniform, symmetric atom-detector grid.
struct DetectorGrid {
    std::vector<double> positions;
    double spacing = 0.0;
    /// Fringe period of the configuration the grid was built for.
    double fringe_period = 0.0;

    std::size_t size() const noexcept { return positions.size(); }
    double x_min() const { return positions.front(); }
    double x_max() const { return positions.back(); }
    /// Index of the sample closest to x.
    std::size_t index_of(double x) const {
        if (positions.size() < 2) {
            return 0;
        }
        const double t = std::round((x - positions.front()) / spacing);
        return static_cast<std::size_t>(std::clamp(t, 0.0, double(positions.size() - 1)));
    }
};

/// Largest half-span of any grid, in units of d.
inline constexpr double kMaxHalfSpan = 6.0;
inline constexpr int kSamplesPerFringe = 20;

/// Grid of `points` samples covering [-half_span, half_span].
inline DetectorGrid make_grid(const ValidatedConfig& config, double half_span, std::size_t points) {
    DetectorGrid g;
    g.fringe_period = config->fringe_period();
    if (points == 0 || !(half_span >= 0.0)) {
        throw ConfigError("grid needs at least one point and a non-negative span");
    }
    if (points == 1 || half_span == 0.0) {
        g.positions = {0.0};
        return g;
    }
    g.spacing = 2.0 * half_span / double(points - 1);
    if (g.spacing > g.fringe_period / kSamplesPerFringe * (1.0 + 1e-12)) {
        throw ConfigError("grid spacing " + std::to_string(g.spacing) +
                          " exceeds fringe period / 20 = " +
                          std::to_string(g.fringe_period / kSamplesPerFringe));
    }
    g.positions.resize(points);
    const double centre = 0.5 * double(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        g.positions[i] = (double(i) - centre) * g.spacing;
    }
    return g;
}

/// Grid over +-min(6d, fringes_per_side fringe periods) with at least 20
/// samples per fringe period.
inline DetectorGrid default_grid(const ValidatedConfig& config, double fringes_per_side) {
    const double period = config->fringe_period();
    const double half = std::min(kMaxHalfSpan * config->slit_separation,
                                 std::max(0.0, fringes_per_side) * period);
    if (half == 0.0) {
        return make_grid(config, 0.0, 1);
    }
    const auto steps =
        static_cast<std::size_t>(std::ceil(half / (period / kSamplesPerFringe) - 1e-9));
    return make_grid(config, half, 2 * steps + 1);
}

/// The full +-6d grid.
inline DetectorGrid full_grid(const ValidatedConfig& config) {
    return default_grid(config, 1e300);
}

}  // namespace lightscope
