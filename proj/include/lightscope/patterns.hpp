#pragma once

// Atom probability patterns at the detector plane z = L.
//
// Each slit contributes psi_side(x) = int_slit exp(i Phi(x, x')) dx' with the
// high-momentum Fresnel phase Phi = p0 (x - x')^2 / (2 L). A photon mode
// multiplies each slit's amplitude by a factor held constant across the slit
// (valid for lambda >> a); every pattern is then a pointwise function of the
// pair (psi_L(x), psi_R(x)).

#include <lightscope/apparatus.hpp>
#include <lightscope/errors.hpp>
#include <lightscope/parallel.hpp>
#include <lightscope/photon_modes.hpp>
#include <lightscope/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <cstddef>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lightscope {

struct QuadratureSettings {
    /// Gauss-Legendre order per panel for the aperture integral.
    int slit_rule_order = 16;
    /// Recoil samples; <= 0 selects recommended_recoil_samples.
    int recoil_samples = 0;
    /// Worker threads for per-point evaluation.
    unsigned workers = 1;

    int recoil_samples_for(const ApparatusConfig& c) const {
        return recoil_samples > 0
                   ? recoil_samples
                   : recommended_recoil_samples(c.photon_wavenumber(), c.slit_separation);
    }
};

/// Phi(x, x') = p0 (x - x')^2 / (2 L), hbar = 1.
inline double fresnel_phase(double x, double source_x, const ApparatusConfig& c) {
    const double u = x - source_x;
    return c.atom_momentum() * u * u / (2.0 * c.screen_distance);
}

struct AmplitudePair {
    cplx left;
    cplx right;
};

/// Evaluates the single-slit amplitudes at arbitrary detector positions.
class SlitField {
public:
    explicit SlitField(ValidatedConfig config, QuadratureSettings settings = {})
        : config_(std::move(config)),
          settings_(settings),
          rule_(gauss_legendre(settings.slit_rule_order)) {}

    const ValidatedConfig& config() const noexcept { return config_; }
    const QuadratureSettings& settings() const noexcept { return settings_; }

    cplx side_amplitude(double x, Side side) const {
        const auto& c = config_.get();
        const double centre = slit_centre(side, c.slit_separation);
        const Interval slit{centre - 0.5 * c.slit_width, centre + 0.5 * c.slit_width};
        const double reach = std::max(std::abs(x - slit.lo), std::abs(x - slit.hi));
        const double rate = c.atom_momentum() * reach / c.screen_distance;
        return integrate_complex(
            [&](double xs) { return std::polar(1.0, fresnel_phase(x, xs, c)); }, rate, slit,
            rule_);
    }

    AmplitudePair at(double x) const {
        return {side_amplitude(x, Side::Left), side_amplitude(x, Side::Right)};
    }

private:
    ValidatedConfig config_;
    QuadratureSettings settings_;
    GaussLegendreRule rule_;
};

/// Slit amplitudes sampled on a detector grid.
struct SlitAmplitudes {
    DetectorGrid grid;
    std::vector<AmplitudePair> values;
};

inline SlitAmplitudes sample_amplitudes(const SlitField& field, const DetectorGrid& grid) {
    SlitAmplitudes out{grid, std::vector<AmplitudePair>(grid.size())};
    parallel_for(grid.size(), field.settings().workers,
                 [&](std::size_t i) { out.values[i] = field.at(grid.positions[i]); });
    return out;
}

/// Per-slit factors <gamma_n|gamma_x'> evaluated at the slit centres.
struct PhotonFactors {
    cplx left{1.0, 0.0};
    cplx right{1.0, 0.0};
};

inline void check_recoil(double kappa, const ApparatusConfig& c) {
    (void)scattering_weight(kappa, c.photon_wavenumber());
}

template <class Kernel = SincLensKernel>
PhotonFactors photon_factors(const std::optional<PhotonMode>& photon, const ApparatusConfig& c,
                             const Kernel& kernel = {}) {
    if (!photon) {
        return {};
    }
    const double xl = slit_centre(Side::Left, c.slit_separation);
    const double xr = slit_centre(Side::Right, c.slit_separation);
    return std::visit(
        [&](const auto& mode) -> PhotonFactors {
            using T = std::decay_t<decltype(mode)>;
            if constexpr (std::is_same_v<T, SlitOrigin>) {
                return mode.side == Side::Left ? PhotonFactors{1.0, 0.0} : PhotonFactors{0.0, 1.0};
            } else if constexpr (std::is_same_v<T, FarField>) {
                check_recoil(mode.kappa, c);
                return {farfield_phase(xl, mode.kappa), farfield_phase(xr, mode.kappa)};
            } else {
                return {imaging_kernel(mode.x, xl, c.photon_wavelength, kernel),
                        imaging_kernel(mode.x, xr, c.photon_wavelength, kernel)};
            }
        },
        *photon);
}

enum class SlitSelection { Left, Right, Both };

/// Atom amplitude at x. Both slits: (f_L psi_L + f_R psi_R) / sqrt(2); one
/// slit: f_side psi_side.
inline cplx combine(const AmplitudePair& a, SlitSelection selection, const PhotonFactors& f) {
    switch (selection) {
        case SlitSelection::Left:
            return f.left * a.left;
        case SlitSelection::Right:
            return f.right * a.right;
        case SlitSelection::Both:
            break;
    }
    return (f.left * a.left + f.right * a.right) / std::numbers::sqrt2;
}

inline cplx slit_amplitude(double x, SlitSelection selection,
                           const std::optional<PhotonMode>& photon, const ValidatedConfig& config,
                           const QuadratureSettings& settings = {}) {
    const SlitField field(config, settings);
    const auto factors = photon_factors(photon, config.get());
    AmplitudePair pair{};
    if (selection != SlitSelection::Right) {
        pair.left = field.side_amplitude(x, Side::Left);
    }
    if (selection != SlitSelection::Left) {
        pair.right = field.side_amplitude(x, Side::Right);
    }
    return combine(pair, selection, factors);
}

/// Sampled probability density on a grid, arbitrary common scale.
struct AtomPattern {
    DetectorGrid grid;
    std::vector<double> values;
    std::string label;
};

struct JointPattern {
    PhotonMode photon;
    AtomPattern atom_pattern;
    /// Relative likelihood of the photon coordinate.
    double joint_scale = 0.0;
};

/// Values below -kNegativeTolerance * peak are a hard error; smaller negative
/// values are clamped to zero with a diagnostic on std::clog.
inline constexpr double kNegativeTolerance = 1e-12;

inline void enforce_nonnegative(AtomPattern& p) {
    double peak = 0.0;
    for (double v : p.values) {
        peak = std::max(peak, std::abs(v));
    }
    std::size_t clamped = 0;
    for (double& v : p.values) {
        if (!std::isfinite(v)) {
            throw NumericalError("pattern '" + p.label + "' has a non-finite value");
        }
        if (v < 0.0) {
            if (v < -kNegativeTolerance * peak) {
                throw NumericalError("pattern '" + p.label + "' has negative probability " +
                                     std::to_string(v));
            }
            v = 0.0;
            ++clamped;
        }
    }
    if (clamped > 0) {
        std::clog << "lightscope: clamped " << clamped << " round-off negatives in pattern '"
                  << p.label << "'\n";
    }
}

/// Evaluates density(pair) at every grid point.
template <class Density>
AtomPattern make_pattern(const SlitAmplitudes& amps, std::string label, Density&& density,
                         unsigned workers = 1) {
    AtomPattern p{amps.grid, std::vector<double>(amps.values.size()), std::move(label)};
    parallel_for(amps.values.size(), workers,
                 [&](std::size_t i) { p.values[i] = density(amps.values[i]); });
    enforce_nonnegative(p);
    return p;
}

// Pointwise densities.

inline double single_density(const cplx& psi) { return std::norm(psi); }

inline double coherent_density(const AmplitudePair& a) {
    return std::norm(a.left + a.right) / 2.0;
}

inline double incoherent_density(const AmplitudePair& a) {
    return (std::norm(a.left) + std::norm(a.right)) / 2.0;
}

inline double photon_density(const AmplitudePair& a, const PhotonFactors& f) {
    return std::norm(combine(a, SlitSelection::Both, f));
}

/// Marginal over recoil: int W |psi_kappa|^2 dkappa / int W dkappa.
inline double decohered_density(const AmplitudePair& a, const RecoilRule& rule, double d) {
    const double total = rule.integrate([](double) { return 1.0; });
    const double sum = rule.integrate([&](double kappa) {
        const PhotonFactors f{farfield_phase(-0.5 * d, kappa), farfield_phase(0.5 * d, kappa)};
        return photon_density(a, f);
    });
    return sum / total;
}

struct NoPhotonPatterns {
    AtomPattern single_left;
    AtomPattern single_right;
    AtomPattern coherent;
    AtomPattern incoherent;
};

inline NoPhotonPatterns no_photon_patterns(const SlitAmplitudes& amps, unsigned workers = 1) {
    return {
        make_pattern(amps, "single_L", [](const AmplitudePair& a) { return single_density(a.left); },
                     workers),
        make_pattern(amps, "single_R",
                     [](const AmplitudePair& a) { return single_density(a.right); }, workers),
        make_pattern(amps, "coherent", coherent_density, workers),
        make_pattern(amps, "incoherent", incoherent_density, workers),
    };
}

inline NoPhotonPatterns no_photon_patterns(const ValidatedConfig& config, const DetectorGrid& grid,
                                           const QuadratureSettings& settings = {}) {
    return no_photon_patterns(sample_amplitudes(SlitField(config, settings), grid),
                              settings.workers);
}

inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

/// Atom pattern conditioned on a far-field photon with recoil kappa_x.
/// joint_scale = W(kappa_x).
inline JointPattern farfield_partial_pattern(double kappa, const SlitAmplitudes& amps,
                                             const ValidatedConfig& config, unsigned workers = 1) {
    const auto& c = config.get();
    const double weight = scattering_weight(kappa, c.photon_wavenumber());
    const PhotonMode photon = FarField{kappa};
    const auto f = photon_factors(photon, c);
    auto pattern = make_pattern(amps, "farfield kappa=" + format_number(kappa),
                                [&](const AmplitudePair& a) { return photon_density(a, f); },
                                workers);
    return {photon, std::move(pattern), weight};
}

inline JointPattern farfield_partial_pattern(double kappa, const ValidatedConfig& config,
                                             const DetectorGrid& grid,
                                             const QuadratureSettings& settings = {}) {
    check_recoil(kappa, config.get());
    return farfield_partial_pattern(kappa, sample_amplitudes(SlitField(config, settings), grid),
                                    config, settings.workers);
}

/// int_M |h(x_gamma - x')|^2 dx' over both slits.
template <class Kernel = SincLensKernel>
double imaging_joint_scale(double x_gamma, const ApparatusConfig& c, const Kernel& kernel = {}) {
    const double k = c.photon_wavenumber();
    const auto rule = gauss_legendre(16);
    double total = 0.0;
    for (Side side : {Side::Left, Side::Right}) {
        const double centre = slit_centre(side, c.slit_separation);
        total += integrate_complex(
            [&](double xs) {
                const double h = std::abs(imaging_kernel(x_gamma, xs, c.photon_wavelength, kernel));
                return h * h;
            },
            2.0 * k, Interval{centre - 0.5 * c.slit_width, centre + 0.5 * c.slit_width}, rule);
    }
    return total;
}

/// Atom pattern conditioned on an imaging-detector photon at x_gamma.
template <class Kernel = SincLensKernel>
JointPattern imaging_partial_pattern(double x_gamma, const SlitAmplitudes& amps,
                                     const ValidatedConfig& config, unsigned workers = 1,
                                     const Kernel& kernel = {}) {
    const auto& c = config.get();
    const PhotonMode photon = ImagePoint{x_gamma};
    const auto f = photon_factors(photon, c, kernel);
    auto pattern = make_pattern(amps, "imaging x_gamma=" + format_number(x_gamma),
                                [&](const AmplitudePair& a) { return photon_density(a, f); },
                                workers);
    return {photon, std::move(pattern), imaging_joint_scale(x_gamma, c, kernel)};
}

inline JointPattern imaging_partial_pattern(double x_gamma, const ValidatedConfig& config,
                                            const DetectorGrid& grid,
                                            const QuadratureSettings& settings = {}) {
    return imaging_partial_pattern(x_gamma, sample_amplitudes(SlitField(config, settings), grid),
                                   config, settings.workers);
}

/// No-detector atom pattern: W-weighted average over recoil of the far-field
/// partial patterns, evaluated with the recoil quadrature.
inline AtomPattern decohered_pattern(const SlitAmplitudes& amps, const ValidatedConfig& config,
                                     const QuadratureSettings& settings = {}) {
    const auto& c = config.get();
    const auto rule = make_recoil_rule(c.photon_wavenumber(), settings.recoil_samples_for(c));
    return make_pattern(
        amps, "decohered",
        [&](const AmplitudePair& a) { return decohered_density(a, rule, c.slit_separation); },
        settings.workers);
}

inline AtomPattern decohered_pattern(const ValidatedConfig& config, const DetectorGrid& grid,
                                     const QuadratureSettings& settings = {}) {
    return decohered_pattern(sample_amplitudes(SlitField(config, settings), grid), config,
                             settings);
}

/// Average of far-field partial patterns weighted by their joint scales,
/// int W(kappa) pattern_kappa dkappa / int W dkappa, by composite Simpson over
/// `intervals` (even) uniform steps of kappa.
class FarFieldAverageDensity {
public:
    FarFieldAverageDensity(const ApparatusConfig& c, int intervals) {
        if (intervals < 2 || intervals % 2 != 0) {
            throw DomainError("Simpson rule needs an even number of intervals");
        }
        const double k = c.photon_wavenumber();
        const double h = 2.0 * k / intervals;
        weight_.resize(std::size_t(intervals) + 1);
        factors_.resize(weight_.size());
        for (int j = 0; j <= intervals; ++j) {
            const double kappa = j == intervals ? 2.0 * k : j * h;
            const double simpson = (j == 0 || j == intervals) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            weight_[j] = simpson * h / 3.0 * scattering_weight(kappa, k);
            factors_[j] = photon_factors(PhotonMode{FarField{kappa}}, c);
            total_ += weight_[j];
        }
    }

    double operator()(const AmplitudePair& a) const {
        double sum = 0.0;
        for (std::size_t j = 0; j < weight_.size(); ++j) {
            sum += weight_[j] * photon_density(a, factors_[j]);
        }
        return sum / total_;
    }

private:
    std::vector<double> weight_;
    std::vector<PhotonFactors> factors_;
    double total_ = 0.0;
};

inline AtomPattern farfield_average_pattern(const SlitAmplitudes& amps,
                                            const ValidatedConfig& config, int intervals = 4000,
                                            unsigned workers = 1) {
    const FarFieldAverageDensity density(config.get(), intervals);
    return make_pattern(amps, "farfield average", density, workers);
}

// Grid integrals and comparisons.

inline double trapezoid(const DetectorGrid& grid, const std::vector<double>& values) {
    if (values.size() < 2) {
        return 0.0;
    }
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        sum += values[i];
    }
    return sum * grid.spacing;
}

/// Pattern scaled by 1 / integral.
inline AtomPattern normalized(const AtomPattern& p, double integral) {
    if (!(integral > 0.0) || !std::isfinite(integral)) {
        throw NumericalError("pattern '" + p.label + "' is not normalizable");
    }
    AtomPattern out = p;
    for (double& v : out.values) {
        v /= integral;
    }
    return out;
}

/// Pattern scaled to unit trapezoid integral over its grid.
inline AtomPattern normalized(const AtomPattern& p) {
    return normalized(p, trapezoid(p.grid, p.values));
}

/// int |p - q| dx of the unit-normalised patterns.
inline double l1_distance(const AtomPattern& p, const AtomPattern& q) {
    if (p.values.size() != q.values.size()) {
        throw DomainError("patterns are on different grids");
    }
    const auto a = normalized(p);
    const auto b = normalized(q);
    std::vector<double> diff(a.values.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] = std::abs(a.values[i] - b.values[i]);
    }
    return trapezoid(p.grid, diff);
}

/// Imaging-basis marginal: joint-scale weighted average of unit-normalised
/// imaging partial patterns over x_gamma in [-half_range, half_range].
template <class Kernel = SincLensKernel>
AtomPattern imaging_average_pattern(const SlitAmplitudes& amps, const ValidatedConfig& config,
                                    double half_range, int nodes, const Kernel& kernel = {}) {
    const auto rule = gauss_legendre(8);
    const int panels = std::max(1, nodes / 8);
    const double h = 2.0 * half_range / panels;
    AtomPattern out{amps.grid, std::vector<double>(amps.values.size(), 0.0), "imaging average"};
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = -half_range + (p + 0.5) * h;
        for (std::size_t j = 0; j < rule.order(); ++j) {
            const double xg = mid + 0.5 * h * rule.nodes[j];
            const auto partial = imaging_partial_pattern(xg, amps, config, 1, kernel);
            const double w = 0.5 * h * rule.weights[j] * partial.joint_scale;
            const auto unit = normalized(partial.atom_pattern);
            for (std::size_t i = 0; i < out.values.size(); ++i) {
                out.values[i] += w * unit.values[i];
            }
            total += w;
        }
    }
    for (double& v : out.values) {
        v /= total;
    }
    return out;
}

/// Gauss-Legendre nodes over an x-interval, with the slit amplitudes at each
/// node. Integrals of pointwise densities computed from it do not depend on
/// the output grid.
class SpanRule {
public:
    SpanRule(const SlitField& field, Interval span) {
        const auto& c = field.config().get();
        const auto rule = gauss_legendre(field.settings().slit_rule_order);
        const double rate = 2.0 * std::numbers::pi / c.fringe_period();
        const std::size_t panels = panel_count(rate, span.hi - span.lo);
        const double h = (span.hi - span.lo) / double(panels);
        for (std::size_t p = 0; p < panels; ++p) {
            const double mid = span.lo + (double(p) + 0.5) * h;
            for (std::size_t j = 0; j < rule.order(); ++j) {
                x_.push_back(mid + 0.5 * h * rule.nodes[j]);
                w_.push_back(0.5 * h * rule.weights[j]);
            }
        }
        pairs_.resize(x_.size());
        parallel_for(x_.size(), field.settings().workers,
                     [&](std::size_t i) { pairs_[i] = field.at(x_[i]); });
    }

    template <class Density>
    double integral(Density&& density, unsigned workers = 1) const {
        std::vector<double> values(x_.size());
        parallel_for(x_.size(), workers, [&](std::size_t i) { values[i] = density(pairs_[i]); });
        double sum = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            sum += w_[i] * values[i];
        }
        return sum;
    }

    std::size_t size() const noexcept { return x_.size(); }

private:
    std::vector<double> x_;
    std::vector<double> w_;
    std::vector<AmplitudePair> pairs_;
};

// Fringe analysis.

namespace detail {

/// Vertex of the parabola through (-1, a), (0, b), (1, c): {offset, value}.
inline std::pair<double, double> parabola_vertex(double a, double b, double c) {
    const double denom = a - 2.0 * b + c;
    if (denom == 0.0) {
        return {0.0, b};
    }
    const double offset = 0.5 * (a - c) / denom;
    return {offset, b - 0.25 * (a - c) * offset};
}

inline double wrap_phase(double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi > std::numbers::pi) {
        phi -= two_pi;
    } else if (phi <= -std::numbers::pi) {
        phi += two_pi;
    }
    return phi;
}

}  // namespace detail

using detail::wrap_phase;

/// Fringe visibility (max - min) / (max + min) over the interpolated local
/// extrema inside [lo, hi]. Falls back to the window's extreme samples when no
/// interior maximum or minimum exists. The window must span at least three
/// fringe periods.
inline double visibility(const AtomPattern& p, Interval window) {
    const auto& g = p.grid;
    if (g.size() < 3 || !(window.hi - window.lo >= 3.0 * g.fringe_period * (1.0 - 1e-9))) {
        throw WindowTooNarrow("visibility window of width " +
                              std::to_string(window.hi - window.lo) +
                              " is narrower than three fringe periods (" +
                              std::to_string(3.0 * g.fringe_period) + ")");
    }
    const auto& v = p.values;
    double hi_val = -INFINITY;
    double lo_val = INFINITY;
    double sample_max = -INFINITY;
    double sample_min = INFINITY;
    bool found_max = false;
    bool found_min = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = g.positions[i];
        if (x < window.lo || x > window.hi) {
            continue;
        }
        sample_max = std::max(sample_max, v[i]);
        sample_min = std::min(sample_min, v[i]);
        if (i == 0 || i + 1 == v.size()) {
            continue;
        }
        if (v[i] >= v[i - 1] && v[i] > v[i + 1]) {
            hi_val = std::max(hi_val, detail::parabola_vertex(v[i - 1], v[i], v[i + 1]).second);
            found_max = true;
        } else if (v[i] <= v[i - 1] && v[i] < v[i + 1]) {
            lo_val = std::min(lo_val, detail::parabola_vertex(v[i - 1], v[i], v[i + 1]).second);
            found_min = true;
        }
    }
    if (!found_max) {
        hi_val = sample_max;
    }
    if (!found_min) {
        lo_val = sample_min;
    }
    lo_val = std::max(lo_val, 0.0);
    if (!(hi_val + lo_val > 0.0)) {
        return 0.0;
    }
    return std::clamp((hi_val - lo_val) / (hi_val + lo_val), 0.0, 1.0);
}

/// Visibility over +-fringes periods around x = 0.
inline double central_visibility(const AtomPattern& p, double fringes = 5.0) {
    const double half = fringes * p.grid.fringe_period;
    return visibility(p, {-half, half});
}

/// Fringe phase of `pattern` minus that of `reference`, in (-pi, pi].
///
/// Cross-correlates the mean-subtracted patterns over +-half_window_fringes
/// periods around x = 0, locates the best lag within one period by quadratic
/// interpolation, and converts the displacement s (pattern(x) ~ reference(x -
/// s)) into phase -2 pi s / period.
inline double fringe_phase_shift(const AtomPattern& pattern, const AtomPattern& reference,
                                 double half_window_fringes = 5.0) {
    const auto& g = pattern.grid;
    if (pattern.values.size() != reference.values.size() || g.spacing <= 0.0) {
        throw DomainError("fringe phase needs two patterns on the same grid");
    }
    const double period = g.fringe_period;
    const auto centre = static_cast<std::ptrdiff_t>(g.index_of(0.0));
    const auto half = static_cast<std::ptrdiff_t>(std::llround(half_window_fringes * period / g.spacing));
    const auto max_lag = static_cast<std::ptrdiff_t>(std::llround(period / g.spacing));
    const auto n = static_cast<std::ptrdiff_t>(g.size());
    if (half < 1 || max_lag < 2 || centre - half - max_lag < 0 || centre + half + max_lag >= n) {
        throw WindowTooNarrow("grid too small for a +-" + std::to_string(half_window_fringes) +
                              " fringe correlation window");
    }
    const auto& p = pattern.values;
    const auto& r = reference.values;
    double p_mean = 0.0;
    for (auto i = centre - half; i <= centre + half; ++i) {
        p_mean += p[i];
    }
    p_mean /= double(2 * half + 1);

    std::vector<double> corr(std::size_t(2 * max_lag + 1));
    for (auto lag = -max_lag; lag <= max_lag; ++lag) {
        double r_mean = 0.0;
        for (auto i = centre - half; i <= centre + half; ++i) {
            r_mean += r[i - lag];
        }
        r_mean /= double(2 * half + 1);
        double sum = 0.0;
        for (auto i = centre - half; i <= centre + half; ++i) {
            sum += (p[i] - p_mean) * (r[i - lag] - r_mean);
        }
        corr[std::size_t(lag + max_lag)] = sum;
    }
    // Interior lags only; the range spans more than one period so a peak exists.
    std::size_t best = 1;
    for (std::size_t j = 1; j + 1 < corr.size(); ++j) {
        if (corr[j] > corr[best]) {
            best = j;
        }
    }
    const double offset = detail::parabola_vertex(corr[best - 1], corr[best], corr[best + 1]).first;
    const double shift = (double(best) - double(max_lag) + offset) * g.spacing;
    return wrap_phase(-2.0 * std::numbers::pi * shift / period);
}

}  // namespace lightscope
