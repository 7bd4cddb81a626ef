#pragma once

namespace waveatom {

/// Physical constants in SI units. The electron mass is always derived
/// from the natural frequency omega_e via m_e = hbar*omega_e/c^2 and is
/// never stored independently.
struct PhysicalConstants {
    double hbar;     ///< reduced Planck constant, J s
    double c;        ///< speed of light, m/s
    double e_charge; ///< elementary charge magnitude, C
    double omega_e;  ///< natural angular frequency of the electron wave, rad/s
    double m_e;      ///< electron mass, kg (derived)

    PhysicalConstants(double hbar_, double c_, double e_charge_, double omega_e_);

    /// Compiled-in reference values (version string in constants_version()).
    static const PhysicalConstants& codata2014();
};

/// Source tag for the compiled-in constants, echoed into run reports.
const char* constants_version();

/// m = hbar*omega/c^2. Rejects omega <= 0.
double electron_mass_from_frequency(double omega,
                                    const PhysicalConstants& k = PhysicalConstants::codata2014());

/// 2*pi*hbar/(m_e c).
double compton_wavelength(const PhysicalConstants& k = PhysicalConstants::codata2014());

} // namespace waveatom
