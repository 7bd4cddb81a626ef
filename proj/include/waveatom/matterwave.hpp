#pragma once

#include "waveatom/constants.hpp"
#include "waveatom/vec3.hpp"

#include <complex>

namespace waveatom::matterwave {

/// Free plane-wave solution u * exp(-i(omega t - k.r)) of the
/// Klein-Gordon-type wave equation; omega follows from the dispersion
/// relation omega^2 = omega_e^2 + c^2 k^2.
struct PlaneWaveState {
    std::complex<double> amplitude{1.0, 0.0};
    Vec3 k;
    double omega_e = 0.0;
    double omega = 0.0; ///< derived, >= omega_e
};

PlaneWaveState make_plane_wave(std::complex<double> amplitude, const Vec3& k, double omega_e,
                               const PhysicalConstants& kc = PhysicalConstants::codata2014());

struct DispersionResult {
    double omega = 0.0;          ///< sqrt(omega_e^2 + c^2 k^2)
    double omega_longwave = 0.0; ///< omega_e + c^2 k^2 / (2 omega_e)
    double relative_gap = 0.0;   ///< |omega_longwave - omega| / omega
};

DispersionResult dispersion(const Vec3& k, double omega_e,
                            const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// Charge, current, energy, and momentum densities of a plane wave:
///   rho = -e (omega/omega_e) |u|^2        j = -(e c^2/omega_e) k |u|^2
///   W   = hbar omega (omega/omega_e)|u|^2 P = hbar k (omega/omega_e)|u|^2
struct PlaneWaveDensities {
    double rho = 0.0;
    Vec3 current;
    double energy = 0.0;
    Vec3 momentum;
};

PlaneWaveDensities plane_wave_densities(const PlaneWaveState& state,
                                        const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// Integrated charge/energy/momentum of a mentally allocated volume V of
/// the plane wave. Z = V (omega/omega_e) |u|^2 is the portion measure;
/// Z = 1 portions carry q = -e, E = hbar*omega, p = hbar*k, and rest
/// mass m_e.
struct WavePortion {
    double Z = 0.0;
    double charge = 0.0;
    double energy = 0.0;
    Vec3 momentum;
    double rest_mass = 0.0;
};

WavePortion portion(const PlaneWaveState& state, double volume,
                    const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// |E^2 - c^2 p^2 - M0^2 c^4| / E^2; zero for an exact portion.
double mass_shell_residual(const WavePortion& p,
                           const PhysicalConstants& kc = PhysicalConstants::codata2014());

} // namespace waveatom::matterwave
