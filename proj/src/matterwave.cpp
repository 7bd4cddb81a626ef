#include "waveatom/matterwave.hpp"

#include "waveatom/errors.hpp"

#include <cmath>

namespace waveatom::matterwave {

DispersionResult dispersion(const Vec3& k, double omega_e, const PhysicalConstants& kc) {
    if (!(omega_e > 0.0)) throw domain_error("dispersion: omega_e must be > 0");
    const double ck2 = kc.c * kc.c * dot(k, k);
    DispersionResult r;
    r.omega = std::sqrt(omega_e * omega_e + ck2);
    r.omega_longwave = omega_e + 0.5 * ck2 / omega_e;
    r.relative_gap = std::abs(r.omega_longwave - r.omega) / r.omega;
    return r;
}

PlaneWaveState make_plane_wave(std::complex<double> amplitude, const Vec3& k, double omega_e,
                               const PhysicalConstants& kc) {
    PlaneWaveState s;
    s.amplitude = amplitude;
    s.k = k;
    s.omega_e = omega_e;
    s.omega = dispersion(k, omega_e, kc).omega;
    return s;
}

PlaneWaveDensities plane_wave_densities(const PlaneWaveState& state, const PhysicalConstants& kc) {
    const double u2 = std::norm(state.amplitude);
    const double boost = state.omega / state.omega_e;
    PlaneWaveDensities d;
    d.rho = -kc.e_charge * boost * u2;
    d.current = -(kc.e_charge * kc.c * kc.c / state.omega_e * u2) * state.k;
    d.energy = kc.hbar * state.omega * boost * u2;
    d.momentum = (kc.hbar * boost * u2) * state.k;
    return d;
}

WavePortion portion(const PlaneWaveState& state, double volume, const PhysicalConstants& kc) {
    if (!(volume >= 0.0)) throw domain_error("portion: volume must be >= 0");
    WavePortion p;
    p.Z = volume * (state.omega / state.omega_e) * std::norm(state.amplitude);
    p.charge = -kc.e_charge * p.Z;
    p.energy = kc.hbar * state.omega * p.Z;
    p.momentum = (kc.hbar * p.Z) * state.k;
    p.rest_mass = kc.hbar * state.omega_e / (kc.c * kc.c) * p.Z;
    return p;
}

double mass_shell_residual(const WavePortion& p, const PhysicalConstants& kc) {
    const double e2 = p.energy * p.energy;
    if (e2 == 0.0) return 0.0;
    const double c2 = kc.c * kc.c;
    const double lhs = e2 - c2 * dot(p.momentum, p.momentum);
    const double rhs = p.rest_mass * p.rest_mass * c2 * c2;
    return std::abs(lhs - rhs) / e2;
}

} // namespace waveatom::matterwave
