#include <lightscope/patterns.hpp>
#include <lightscope/semiclassical.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace lightscope;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST(PhaseNoRecoil, Values) {
    const auto c = default_config();
    EXPECT_EQ(phase_no_recoil(0.0, c), 0.0);
    EXPECT_NEAR(phase_no_recoil(c.fringe_period(), c), 2 * pi, 1e-12);
}

TEST(PhaseNoRecoil, MatchesCoherentFringeSpacing) {
    const auto config = validate(default_config());
    const auto grid = default_grid(config, 30.0);
    const auto p = no_photon_patterns(config, grid);
    std::vector<double> maxima;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const auto& v = p.coherent.values;
        if (v[i] >= v[i - 1] && v[i] > v[i + 1]) {
            maxima.push_back(grid.positions[i]);
        }
    }
    ASSERT_GT(maxima.size(), 20u);
    const double spacing = (maxima.back() - maxima.front()) / double(maxima.size() - 1);
    // One fringe is where the no-recoil phase advances by 2 pi.
    EXPECT_NEAR(phase_no_recoil(spacing, config.get()) / (2 * pi), 1.0, 0.01);
}

TEST(PhaseWithRecoil, Values) {
    const auto c = default_config();
    for (double x : {-3.0, 0.1, 5.0}) {
        EXPECT_EQ(phase_with_recoil(x, 0.0, c), phase_no_recoil(x, c));
    }
    EXPECT_NEAR(phase_with_recoil(0.0, 2 * pi, c), -2 * pi, 1e-15);
}

TEST(PhaseWithRecoil, PredictsMeasuredFringeShift) {
    const auto config = validate(default_config(0.1));
    const auto& c = config.get();
    const auto amps = sample_amplitudes(SlitField(config), default_grid(config, 20.0));
    const auto ref = farfield_partial_pattern(0.0, amps, config);
    const double k = c.photon_wavenumber();
    for (double f : {0.1, 0.5, 1.0, 1.33, 2.0}) {
        const auto jp = farfield_partial_pattern(f * k, amps, config);
        const double predicted = phase_with_recoil(0.0, f * k, c) - phase_no_recoil(0.0, c);
        const double measured = fringe_phase_shift(jp.atom_pattern, ref.atom_pattern);
        EXPECT_NEAR(wrap_phase(measured - predicted), 0.0, 0.05) << "kappa/k = " << f;
    }
}

TEST(Deflection, Values) {
    const auto c = default_config(0.1);
    EXPECT_EQ(deflection(0.0, c), 0.0);
    EXPECT_NEAR(deflection(2 * c.photon_wavenumber(), c), 0.8, 1e-12);
    EXPECT_NEAR(deflection(3.0, c), 3.0 * deflection(1.0, c), 1e-15);
}

TEST(PhaseCarry, Examples) {
    const auto c = default_config(0.1);
    EXPECT_LT(phase_carry_check(1.3, 17.0, c).residual, 1e-12);
    EXPECT_EQ(phase_carry_check(2.2, 0.0, c).residual, 0.0);
}

TEST(PhaseCarry, RandomisedSweep) {
    const auto c = default_config(0.1);
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ux(-6.0, 6.0);
    std::uniform_real_distribution<double> uk(0.0, 2.0 * c.photon_wavenumber());
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto r = phase_carry_check(ux(rng), uk(rng), c);
        worst = std::max(worst, r.residual);
        EXPECT_NEAR(r.lhs, r.rhs, 1e-10);
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(SloppyArgument, Bookkeeping) {
    const auto c = default_config(0.1);
    const auto same = sloppy_argument_demo(0.7, 0.0, c);
    EXPECT_EQ(same.naive_phase, same.correct_phase);

    const double kappa = 2 * pi;
    const auto s = sloppy_argument_demo(0.7, kappa, c);
    EXPECT_NEAR(s.naive_phase - s.correct_phase, kappa * c.slit_separation, 1e-10);
    EXPECT_NEAR(s.naive_phase, s.unperturbed_at_landing, 1e-10);

    const double before = phase_no_recoil(0.7, c);
    for (double k : {0.0, 5.0, 30.0, 2 * c.photon_wavenumber()}) {
        EXPECT_NEAR(sloppy_argument_demo(0.7, k, c).correct_phase, before, 1e-10);
    }
}

TEST(LongitudinalSmearing, Values) {
    const auto c = default_config(0.1);
    const double lambda = c.photon_wavelength;
    const double kz = 2 * pi / lambda;
    EXPECT_EQ(longitudinal_smearing(0.0, kz, c), 0.0);
    const double boundary = lambda / c.slit_separation * c.screen_distance;
    EXPECT_NEAR(longitudinal_smearing(boundary, kz, c), 2 * pi, 1e-12);
    EXPECT_NEAR(longitudinal_smearing(boundary / 10.0, kz, c), pi / 5.0, 1e-12);
    EXPECT_FALSE(smearing_negligible(boundary / 10.0, kz, c));
    EXPECT_TRUE(smearing_negligible(boundary / 40.0, kz, c));
}

TEST(PhaseReport, FieldsAreConsistent) {
    const auto c = default_config(0.1);
    const auto r = phase_report(1.5, 40.0, c);
    EXPECT_EQ(r.phase_before, phase_no_recoil(1.5, c));
    EXPECT_EQ(r.phase_after, phase_with_recoil(1.5, 40.0, c));
    EXPECT_EQ(r.deflection, deflection(40.0, c));
    EXPECT_LT(r.carry_residual, 1e-12);
}
