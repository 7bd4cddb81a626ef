#include "waveatom/constants.hpp"
#include "waveatom/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace waveatom;

TEST_CASE("electron mass from the natural frequency") {
    const auto& k = PhysicalConstants::codata2014();
    const double m = electron_mass_from_frequency(7.763440716e20, k);
    CHECK(std::abs(m - 9.10938356e-31) / 9.10938356e-31 < 5e-9);
    CHECK(m == k.m_e);
}

TEST_CASE("mass-frequency preconditions") {
    CHECK_THROWS_AS(electron_mass_from_frequency(0.0), domain_error);
    CHECK_THROWS_AS(electron_mass_from_frequency(-1.0), domain_error);
}

TEST_CASE("identity construction: omega = c^2/hbar gives 1 kg") {
    const auto& k = PhysicalConstants::codata2014();
    const double omega = k.c * k.c / k.hbar;
    CHECK(electron_mass_from_frequency(omega, k) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mass-frequency round trip") {
    const auto& k = PhysicalConstants::codata2014();
    for (const double omega : {1.0, 7.763440716e20, 3.5e12}) {
        const double m = electron_mass_from_frequency(omega, k);
        CHECK(m * k.c * k.c / k.hbar == doctest::Approx(omega).epsilon(1e-14));
    }
}

TEST_CASE("compton wavelength from compiled constants") {
    const double lc = compton_wavelength();
    CHECK(std::abs(lc - 2.4263102e-12) / 2.4263102e-12 < 1e-5);
}

TEST_CASE("compton wavelength scaling at fixed electron mass") {
    const auto& k = PhysicalConstants::codata2014();
    // Doubling hbar at fixed m_e means halving omega_e (the mass is
    // always derived), and doubles 2*pi*hbar/(m_e c).
    const PhysicalConstants hbar2(2.0 * k.hbar, k.c, k.e_charge, 0.5 * k.omega_e);
    CHECK(hbar2.m_e == doctest::Approx(k.m_e).epsilon(1e-15));
    CHECK(compton_wavelength(hbar2) == doctest::Approx(2.0 * compton_wavelength(k)).epsilon(1e-14));
    // Doubling c at fixed m_e requires omega_e -> 4 omega_e and halves it.
    const PhysicalConstants c2(k.hbar, 2.0 * k.c, k.e_charge, 4.0 * k.omega_e);
    CHECK(c2.m_e == doctest::Approx(k.m_e).epsilon(1e-15));
    CHECK(compton_wavelength(c2) == doctest::Approx(0.5 * compton_wavelength(k)).epsilon(1e-14));
}

TEST_CASE("constants are validated and deterministic") {
    CHECK_THROWS_AS(PhysicalConstants(0.0, 1.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(PhysicalConstants(1.0, 1.0, -1.0, 1.0), domain_error);
    CHECK(compton_wavelength() == compton_wavelength());
    CHECK(PhysicalConstants::codata2014().m_e == PhysicalConstants::codata2014().m_e);
    CHECK(constants_version() == doctest::String("CODATA-2014"));
}
