#pragma once

#include "waveatom/constants.hpp"
#include "waveatom/vec3.hpp"

namespace waveatom::compton {

/// Incident photon (omega0, direction k0_dir), incident electron-wave
/// momentum p0 (kg m/s), observation direction n_dir. Directions must be
/// unit vectors to 1e-12.
struct ComptonInput {
    double omega0 = 0.0;
    Vec3 k0_dir{0.0, 0.0, 1.0};
    Vec3 p0;
    Vec3 n_dir{0.0, 0.0, 1.0};
};

void validate(const ComptonInput& in);

/// E(p) = sqrt(c^2 p^2 + m_e^2 c^4).
double wave_energy(const Vec3& p, const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// Scattered frequency from the closed-form solution of the dispersion
/// plus conservation system:
///   omega = (E0 w0 - c^2 k0.p0) / (E0 - c p0.n + hbar w0 (1 - cos th))
/// Nonpositive numerator or denominator means the observation direction
/// is kinematically invalid.
double scattered_frequency(const ComptonInput& in,
                           const PhysicalConstants& kc = PhysicalConstants::codata2014());

struct ComptonResult {
    double omega = 0.0;
    Vec3 p; ///< outgoing electron-wave momentum
    double energy_residual = 0.0;
    double momentum_residual = 0.0;
};

/// Outgoing momentum p = p0 + hbar k0 - n hbar omega / c and the
/// conservation residuals (relative; both vanish for an exact solution).
ComptonResult outgoing_momentum(const ComptonInput& in, double omega,
                                const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// Convenience: scattered_frequency followed by outgoing_momentum.
ComptonResult solve(const ComptonInput& in,
                    const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// Wavelength shift (2 pi hbar / (m_e c)) (1 - cos theta); independent
/// of lambda0, which only has to be positive.
double compton_shift(double lambda0, double theta,
                     const PhysicalConstants& kc = PhysicalConstants::codata2014());

} // namespace waveatom::compton
