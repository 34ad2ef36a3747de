#pragma once

// Photon-basis amplitudes and the slit overlap Gamma = <gamma_R|gamma_L>.
//
// Far-field projection of a photon scattered at x': S(k_f) exp(i kappa_x x'),
// with S absorbed into the normalisation. The kappa_x dependence of the
// scattering probability lives in scattering_weight (quadrature.hpp).

#include <lightscope/apparatus.hpp>
#include <lightscope/quadrature.hpp>

#include <cmath>
#include <complex>
#include <variant>

namespace lightscope {

enum class Side { Left, Right };

inline double slit_centre(Side side, double separation) {
    return side == Side::Left ? -0.5 * separation : 0.5 * separation;
}

/// Photon emitted from one slit (localizing basis).
struct SlitOrigin {
    Side side;
};

/// Photon with definite far-field recoil kappa_x in [0, 2k].
struct FarField {
    double kappa;
};

/// Photon detected at image-plane position x_gamma (image relabelled so that
/// x_gamma = x for a source at x).
struct ImagePoint {
    double x;
};

using PhotonMode = std::variant<SlitOrigin, FarField, ImagePoint>;

/// exp(i kappa x'), unit modulus.
inline cplx farfield_phase(double source_x, double kappa) {
    return std::polar(1.0, kappa * source_x);
}

/// Ideal unit-magnification lens with full collection: amplitude point spread
/// sin(k u) / (k u).
struct SincLensKernel {
    double operator()(double u, double k) const {
        const double ku = k * u;
        if (std::abs(ku) < 1e-8) {
            return 1.0 - ku * ku / 6.0;
        }
        return std::sin(ku) / ku;
    }
};

template <class Kernel = SincLensKernel>
cplx imaging_kernel(double x_gamma, double source_x, double lambda, const Kernel& kernel = {}) {
    return kernel(x_gamma - source_x, 2.0 * std::numbers::pi / lambda);
}

/// Gamma = <gamma_R|gamma_L>, |value| <= 1.
class OverlapAmplitude {
public:
    OverlapAmplitude(cplx value, double lambda_over_d) : value_(value), ratio_(lambda_over_d) {
        if (!(std::abs(value) <= 1.0 + 1e-12)) {
            throw OverlapOutOfRange("|Gamma| = " + std::to_string(std::abs(value)) + " exceeds 1");
        }
    }

    cplx value() const noexcept { return value_; }
    double magnitude() const { return std::abs(value_); }
    double lambda_over_d() const noexcept { return ratio_; }

private:
    cplx value_;
    double ratio_;
};

/// Far-field basis overlap:
///   Gamma = int_0^{2k} W(kappa) exp(-i kappa d) dkappa / int_0^{2k} W(kappa) dkappa.
/// `samples` <= 0 selects recommended_recoil_samples.
inline OverlapAmplitude slit_overlap(double lambda, double d, int samples = 0) {
    if (!(lambda > 0.0)) {
        throw DomainError("photon wavelength must be positive");
    }
    const double k = 2.0 * std::numbers::pi / lambda;
    const int n = samples > 0 ? samples : recommended_recoil_samples(k, d);
    const auto rule = make_recoil_rule(k, n);
    const cplx num = rule.integrate([d](double kappa) { return std::polar(1.0, -kappa * d); });
    const double den = rule.integrate([](double) { return 1.0; });
    cplx g = num / den;
    // Quadrature rounding can push |g| a few ulps past 1 as d -> 0.
    if (std::abs(g) > 1.0) {
        g /= std::abs(g);
    }
    return {g, d == 0.0 ? INFINITY : lambda / d};
}

/// Imaging-basis overlap
///   int h(u + d/2) h*(u - d/2) du / int |h(u)|^2 du
/// truncated to |u| <= half_range (defaults to max(200 lambda, 50 d)).
template <class Kernel = SincLensKernel>
cplx imaging_overlap(double lambda, double d, double half_range = 0.0,
                     const Kernel& kernel = {}) {
    const double k = 2.0 * std::numbers::pi / lambda;
    const double range = half_range > 0.0 ? half_range : std::max(200.0 * lambda, 50.0 * d);
    const auto rule = gauss_legendre(16);
    const Interval span{-range, range};
    const cplx num = integrate_complex(
        [&](double u) { return kernel(u + 0.5 * d, k) * std::conj(cplx(kernel(u - 0.5 * d, k))); },
        2.0 * k, span, rule);
    const double den = integrate_complex(
        [&](double u) {
            const double h = kernel(u, k);
            return h * h;
        },
        2.0 * k, span, rule);
    return num / den;
}

}  // namespace lightscope
