#pragma once

// Composite Gauss-Legendre quadrature for oscillatory complex integrands.

#include <lightscope/errors.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

namespace lightscope {

using cplx = std::complex<double>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t order() const noexcept { return nodes.size(); }
};

inline GaussLegendreRule gauss_legendre(int order) {
    if (order < 2) {
        throw DomainError("Gauss-Legendre order must be >= 2, got " + std::to_string(order));
    }
    const auto n = static_cast<std::size_t>(order);
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * double(k) - 1.0) * x * p1 - (double(k) - 1.0) * p0) /
                                  double(k);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double p2 =
                ((2.0 * double(k) - 1.0) * x * p1 - (double(k) - 1.0) * p0) / double(k);
            p0 = p1;
            p1 = p2;
        }
        dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

/// Largest phase advance allowed across one panel.
inline constexpr double kMaxPanelPhase = std::numbers::pi / 4.0;

/// Panels needed so each spans at most pi/4 radians of declared phase.
inline std::size_t panel_count(double max_phase_rate, double width) {
    const double phase = std::abs(max_phase_rate) * width;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(phase / kMaxPanelPhase)));
}

struct Interval {
    double lo;
    double hi;
};

namespace detail {
inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
}  // namespace detail

/// Integrates f over `interval` with a composite rule whose panel count keeps
/// the declared phase rate (radians per unit length) below pi/4 per panel.
/// The result type follows f (real or complex).
template <class F>
auto integrate_complex(F&& f, double max_phase_rate, Interval interval,
                       const GaussLegendreRule& rule) {
    using R = std::decay_t<decltype(f(0.0))>;
    if (!(interval.lo < interval.hi)) {
        throw DomainError("integration interval must satisfy lo < hi");
    }
    const std::size_t panels = panel_count(max_phase_rate, interval.hi - interval.lo);
    const double h = (interval.hi - interval.lo) / double(panels);
    R total{};
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = interval.lo + (double(p) + 0.5) * h;
        R panel{};
        for (std::size_t j = 0; j < rule.order(); ++j) {
            const R v = f(mid + 0.5 * h * rule.nodes[j]);
            if (!detail::finite(v)) {
                throw NonFiniteIntegrand("integrand is not finite at x = " +
                                         std::to_string(mid + 0.5 * h * rule.nodes[j]));
            }
            panel += rule.weights[j] * v;
        }
        total += 0.5 * h * panel;
    }
    return total;
}

template <class F>
auto integrate_complex(F&& f, double max_phase_rate, Interval interval, int rule_order = 16) {
    return integrate_complex(std::forward<F>(f), max_phase_rate, interval,
                             gauss_legendre(rule_order));
}

/// Angular scattering weight left after the azimuthal integral,
/// W(kappa) = 2k^2 + kappa^2 - 2 k kappa, on 0 <= kappa <= 2k.
inline double scattering_weight(double kappa, double k) {
    if (!(kappa >= 0.0 && kappa <= 2.0 * k)) {
        throw DomainError("recoil kappa_x = " + std::to_string(kappa) + " outside [0, 2k] = [0, " +
                          std::to_string(2.0 * k) + "]");
    }
    return 2.0 * k * k + kappa * kappa - 2.0 * k * kappa;
}

/// Closed form of the integral of W over [0, 2k].
inline double scattering_weight_total(double k) { return 8.0 * k * k * k / 3.0; }

inline constexpr int kRecoilPanelOrder = 8;
inline constexpr int kDefaultRecoilSamples = 1024;

/// Default recoil sample count for separation d: at least 1024, and at least
/// 64 samples per cycle of exp(i kappa d) over [0, 2k].
inline int recommended_recoil_samples(double k, double d) {
    const double cycles = 2.0 * k * std::abs(d) / (2.0 * std::numbers::pi);
    const int wanted = static_cast<int>(std::ceil(64.0 * cycles));
    const int n = std::max(kDefaultRecoilSamples, wanted);
    return (n + kRecoilPanelOrder - 1) / kRecoilPanelOrder * kRecoilPanelOrder;
}

/// Precomputed recoil nodes with the scattering weight folded into the
/// quadrature weights.
struct RecoilRule {
    double k = 0.0;
    std::vector<double> kappa;
    std::vector<double> weight;

    template <class G>
    auto integrate(G&& g) const {
        using R = std::decay_t<decltype(g(0.0))>;
        R total{};
        for (std::size_t i = 0; i < kappa.size(); ++i) {
            const R v = g(kappa[i]);
            if (!detail::finite(v)) {
                throw NonFiniteIntegrand("recoil integrand is not finite at kappa = " +
                                         std::to_string(kappa[i]));
            }
            total += weight[i] * v;
        }
        return total;
    }
};

inline RecoilRule make_recoil_rule(double k, int samples) {
    if (!(k > 0.0)) {
        throw DomainError("photon wavenumber must be positive");
    }
    if (samples < kRecoilPanelOrder) {
        throw DomainError("recoil quadrature needs at least 8 samples");
    }
    const auto rule = gauss_legendre(kRecoilPanelOrder);
    const int panels = (samples + kRecoilPanelOrder - 1) / kRecoilPanelOrder;
    const double h = 2.0 * k / double(panels);
    RecoilRule out;
    out.k = k;
    out.kappa.reserve(std::size_t(panels) * rule.order());
    out.weight.reserve(out.kappa.capacity());
    for (int p = 0; p < panels; ++p) {
        const double mid = (double(p) + 0.5) * h;
        for (std::size_t j = 0; j < rule.order(); ++j) {
            const double kappa = mid + 0.5 * h * rule.nodes[j];
            out.kappa.push_back(kappa);
            out.weight.push_back(0.5 * h * rule.weights[j] * scattering_weight(kappa, k));
        }
    }
    return out;
}

/// Integral over [0, 2k] of W(kappa) g(kappa).
template <class G>
auto integrate_weighted_recoil(G&& g, double k, int samples = kDefaultRecoilSamples) {
    return make_recoil_rule(k, samples).integrate(std::forward<G>(g));
}

}  // namespace lightscope
