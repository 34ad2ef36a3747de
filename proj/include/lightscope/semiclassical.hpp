#pragma once

// Narrow-slit interferometer phase bookkeeping with and without recoil.
// hbar = 1, p0 = 2 pi / lambda_dB.

#include <lightscope/apparatus.hpp>

#include <cmath>
#include <numbers>

namespace lightscope {

/// Unperturbed two-slit phase p0 d x / L.
inline double phase_no_recoil(double x, const ApparatusConfig& c) {
    return c.atom_momentum() * c.slit_separation * x / c.screen_distance;
}

/// Phase after recoil kappa_x: p0 d x / L - kappa_x d.
inline double phase_with_recoil(double x, double kappa, const ApparatusConfig& c) {
    return phase_no_recoil(x, c) - kappa * c.slit_separation;
}

/// Landing displacement kappa_x L / p0 caused by the recoil.
inline double deflection(double kappa, const ApparatusConfig& c) {
    return kappa * c.screen_distance / c.atom_momentum();
}

struct PhaseCarry {
    double lhs;       ///< post-recoil phase at the deflected landing point
    double rhs;       ///< pre-recoil phase at the undeflected point
    double residual;  ///< |lhs - rhs|
};

/// A deflected atom keeps its pre-recoil phase:
/// phase_with_recoil(x + deflection, kappa) == phase_no_recoil(x).
inline PhaseCarry phase_carry_check(double x, double kappa, const ApparatusConfig& c) {
    const double lhs = phase_with_recoil(x + deflection(kappa, c), kappa, c);
    const double rhs = phase_no_recoil(x, c);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

struct SloppyArgument {
    /// phase_no_recoil(x) + kappa d: recoil added to p_x with x held fixed.
    double naive_phase;
    /// Phase the deflected atom actually carries, equal to phase_no_recoil(x).
    double correct_phase;
    /// Unperturbed phase at the landing point x + deflection.
    double unperturbed_at_landing;
};

/// The naive substitution p_x -> p_x + kappa only reproduces the unperturbed
/// phase at the shifted landing point (naive_phase == unperturbed_at_landing);
/// it predicts no washout on its own.
inline SloppyArgument sloppy_argument_demo(double x, double kappa, const ApparatusConfig& c) {
    return {phase_no_recoil(x, c) + kappa * c.slit_separation,
            phase_with_recoil(x + deflection(kappa, c), kappa, c),
            phase_no_recoil(x + deflection(kappa, c), c)};
}

/// Phase smearing (x / L)(kappa_z d) from a longitudinal recoil kappa_z.
inline double longitudinal_smearing(double x, double kappa_z, const ApparatusConfig& c) {
    return x / c.screen_distance * kappa_z * c.slit_separation;
}

/// True when the longitudinal smearing at x stays below pi / 10.
inline bool smearing_negligible(double x, double kappa_z, const ApparatusConfig& c) {
    return std::abs(longitudinal_smearing(x, kappa_z, c)) < std::numbers::pi / 10.0;
}

struct PhaseReport {
    double x;
    double kappa;
    double phase_before;
    double phase_after;
    double deflection;
    double carry_residual;
};

inline PhaseReport phase_report(double x, double kappa, const ApparatusConfig& c) {
    return {x, kappa, phase_no_recoil(x, c), phase_with_recoil(x, kappa, c), deflection(kappa, c),
            phase_carry_check(x, kappa, c).residual};
}

}  // namespace lightscope
