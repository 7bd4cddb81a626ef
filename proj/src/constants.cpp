#include "waveatom/constants.hpp"

#include "waveatom/errors.hpp"

#include <numbers>
#include <string>

namespace waveatom {

namespace {
constexpr double kHbar = 1.054571800e-34;     // J s
constexpr double kSpeedOfLight = 299792458.0; // m/s, exact
constexpr double kElementaryCharge = 1.6021766208e-19; // C
constexpr double kOmegaE = 7.763440716e20;    // rad/s
} // namespace

PhysicalConstants::PhysicalConstants(double hbar_, double c_, double e_charge_, double omega_e_)
    : hbar(hbar_), c(c_), e_charge(e_charge_), omega_e(omega_e_),
      m_e(hbar_ * omega_e_ / (c_ * c_)) {
    if (!(hbar > 0.0 && c > 0.0 && e_charge > 0.0 && omega_e > 0.0)) {
        throw domain_error("PhysicalConstants: all fields must be strictly positive");
    }
}

const PhysicalConstants& PhysicalConstants::codata2014() {
    static const PhysicalConstants k(kHbar, kSpeedOfLight, kElementaryCharge, kOmegaE);
    return k;
}

const char* constants_version() { return "CODATA-2014"; }

double electron_mass_from_frequency(double omega, const PhysicalConstants& k) {
    if (!(omega > 0.0)) {
        throw domain_error("electron_mass_from_frequency: omega must be > 0, got " +
                           std::to_string(omega));
    }
    return k.hbar * omega / (k.c * k.c);
}

double compton_wavelength(const PhysicalConstants& k) {
    return 2.0 * std::numbers::pi * k.hbar / (k.m_e * k.c);
}

} // namespace waveatom
