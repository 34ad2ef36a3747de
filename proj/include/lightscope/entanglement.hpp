#pragma once

// Atom-photon density matrices and branching summaries.
//
// Joint state (|L>|gamma_L> + |R>|gamma_R>) / sqrt(2) written in the
// orthonormal photon basis e1 = gamma_L, e2 ~ gamma_R - <gamma_L|gamma_R> gamma_L,
// ordered L(x)e1, L(x)e2, R(x)e1, R(x)e2. Gamma = <gamma_R|gamma_L>.

#include <lightscope/apparatus.hpp>
#include <lightscope/errors.hpp>
#include <lightscope/photon_modes.hpp>
#include <lightscope/quadrature.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace lightscope {

class DensityMatrix {
public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;
    static constexpr double kEigenTolerance = 1e-10;

    /// Validates Hermiticity, unit trace and positivity.
    explicit DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
        const auto n = m_.rows();
        if (m_.cols() != n || (n != 2 && n != 4)) {
            throw DomainError("density matrix must be 2x2 or 4x4");
        }
        if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
            throw DomainError("density matrix is not Hermitian");
        }
        if (std::abs(m_.trace() - cplx(1.0, 0.0)) > kTraceTolerance) {
            throw DomainError("density matrix trace is not 1");
        }
        if (eigenvalues().minCoeff() < -kEigenTolerance) {
            throw DomainError("density matrix has a negative eigenvalue");
        }
    }

    Eigen::Index dimension() const noexcept { return m_.rows(); }
    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
    cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    /// Ascending eigenvalues.
    Eigen::VectorXd eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
        return solver.eigenvalues();
    }

private:
    Eigen::MatrixXcd m_;
};

enum class GramSchmidtSeed { Left, Right };

inline void check_overlap(cplx gamma) {
    if (!(std::abs(gamma) <= 1.0 + 1e-12)) {
        throw OverlapOutOfRange("|Gamma| = " + std::to_string(std::abs(gamma)) + " exceeds 1");
    }
}

namespace detail {

/// sqrt(2) times the joint state.
inline Eigen::Vector4cd scaled_joint_state(cplx gamma, GramSchmidtSeed seed) {
    check_overlap(gamma);
    const double s = std::sqrt(std::max(0.0, 1.0 - std::norm(gamma)));
    Eigen::Vector4cd v;
    if (seed == GramSchmidtSeed::Left) {
        // gamma_R = conj(Gamma) e1 + s e2
        v << 1.0, 0.0, std::conj(gamma), s;
    } else {
        // e1 = gamma_R, gamma_L = Gamma e1 + s e2
        v << gamma, s, 1.0, 0.0;
    }
    return v;
}

}  // namespace detail

/// State vector of the joint atom-photon state in the Gram-Schmidt basis.
/// Seeding from gamma_R swaps the roles of the two photon states.
inline Eigen::Vector4cd joint_state(cplx gamma, GramSchmidtSeed seed = GramSchmidtSeed::Left) {
    return detail::scaled_joint_state(gamma, seed) / std::numbers::sqrt2;
}

inline DensityMatrix joint_density(cplx gamma, GramSchmidtSeed seed = GramSchmidtSeed::Left) {
    const Eigen::Vector4cd v = detail::scaled_joint_state(gamma, seed);
    Eigen::MatrixXcd rho = 0.5 * (v * v.adjoint());
    // Exact Hermitian symmetry.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix(rho);
}

inline DensityMatrix joint_density(const OverlapAmplitude& gamma,
                                   GramSchmidtSeed seed = GramSchmidtSeed::Left) {
    return joint_density(gamma.value(), seed);
}

/// Partial trace over the photon factor of a 4x4 (atom x photon) matrix.
inline DensityMatrix reduce_to_atom(const DensityMatrix& joint) {
    if (joint.dimension() != 4) {
        throw DomainError("reduce_to_atom expects a 4x4 joint density matrix");
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int e = 0; e < 2; ++e) {
                rho(a, b) += joint(2 * a + e, 2 * b + e);
            }
        }
    }
    return DensityMatrix(rho);
}

/// Tr(rho^2).
inline double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

/// <L, gamma_R, gamma_L | chi_2> for the two-photon state
/// (|L>|gamma_L>|gamma_L> + |R>|gamma_R>|gamma_R>) / sqrt(2).
inline cplx two_photon_cross_amplitude(cplx gamma) {
    check_overlap(gamma);
    return gamma / std::numbers::sqrt2;
}

struct PathPosterior {
    double left;
    double right;
};

/// Born-rule which-path posterior from one imaging photon at x_gamma:
/// p_side ~ int_{slit side} |h(x_gamma - x')|^2 dx'.
template <class Kernel = SincLensKernel>
PathPosterior which_path_posterior(double x_gamma, double lambda, const ValidatedConfig& config,
                                   const Kernel& kernel = {}) {
    const auto& c = config.get();
    const double k = 2.0 * std::numbers::pi / lambda;
    const auto rule = gauss_legendre(16);
    auto mass = [&](Side side) {
        const double centre = slit_centre(side, c.slit_separation);
        return integrate_complex(
            [&](double xs) {
                const double h = std::abs(imaging_kernel(x_gamma, xs, lambda, kernel));
                return h * h;
            },
            2.0 * k, Interval{centre - 0.5 * c.slit_width, centre + 0.5 * c.slit_width}, rule);
    };
    const double left = mass(Side::Left);
    const double right = mass(Side::Right);
    const double total = left + right;
    if (!(total > 0.0)) {
        throw NumericalError("photon at x_gamma = " + std::to_string(x_gamma) +
                             " has zero detection probability");
    }
    return {left / total, right / total};
}

/// Distinguishability of the L and R branches after n independently scattered
/// photons, 1 - |Gamma|^n.
inline double branch_distinguishability(int n_photons, cplx gamma) {
    if (n_photons < 0) {
        throw DomainError("photon count must be non-negative");
    }
    check_overlap(gamma);
    return 1.0 - std::pow(std::min(1.0, std::abs(gamma)), n_photons);
}

}  // namespace lightscope
