#include "waveatom/compton.hpp"

#include "waveatom/errors.hpp"
#include "waveatom/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace waveatom;

namespace {

const PhysicalConstants& kc = PhysicalConstants::codata2014();

Vec3 random_unit(rng::CounterStream& s, std::uint64_t base) {
    const double z = 2.0 * s.uniform(base) - 1.0;
    const double phi = 2.0 * std::numbers::pi * s.uniform(base + 1);
    const double r = std::sqrt(1.0 - z * z);
    return {r * std::cos(phi), r * std::sin(phi), z};
}

// Rodrigues rotation, used to check frame-independence.
Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return c * v + s * cross(axis, v) + (1.0 - c) * dot(axis, v) * axis;
}

} // namespace

TEST_CASE("forward scattering at rest is shift-free") {
    compton::ComptonInput in;
    in.omega0 = 0.8 * kc.m_e * kc.c * kc.c / kc.hbar;
    const auto r = compton::solve(in, kc);
    CHECK(r.omega == doctest::Approx(in.omega0).epsilon(1e-15));
    CHECK(norm(r.p) / (kc.m_e * kc.c) < 1e-15);
    CHECK(r.energy_residual < 1e-15);
    CHECK(r.momentum_residual < 1e-15);
}

TEST_CASE("backscatter at the electron rest energy gives omega0/3") {
    compton::ComptonInput in;
    in.omega0 = kc.m_e * kc.c * kc.c / kc.hbar;
    in.n_dir = {0.0, 0.0, -1.0};
    const auto r = compton::solve(in, kc);
    CHECK(r.omega == doctest::Approx(in.omega0 / 3.0).epsilon(1e-12));
    // |p| = hbar (omega0 + omega)/c = (4/3) m_e c
    CHECK(norm(r.p) == doctest::Approx(4.0 / 3.0 * kc.m_e * kc.c).epsilon(1e-12));
    // E(p) = (5/3) m_e c^2 = E0 + hbar omega0 - hbar omega
    CHECK(compton::wave_energy(r.p, kc) ==
          doctest::Approx(5.0 / 3.0 * kc.m_e * kc.c * kc.c).epsilon(1e-12));
    CHECK(r.energy_residual < 1e-12);
    CHECK(r.momentum_residual < 1e-12);
}

TEST_CASE("conservation residuals vanish for random moving-wave inputs") {
    rng::CounterStream s(2718, 0);
    double worst_energy = 0.0, worst_momentum = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const std::uint64_t base = 100 * i;
        compton::ComptonInput in;
        in.omega0 = (0.05 + 3.0 * s.uniform(base + 10)) * kc.m_e * kc.c * kc.c / kc.hbar;
        in.k0_dir = random_unit(s, base);
        in.n_dir = random_unit(s, base + 2);
        in.p0 = (0.5 * kc.m_e * kc.c) * random_unit(s, base + 4);
        const auto r = compton::solve(in, kc);
        worst_energy = std::max(worst_energy, r.energy_residual);
        worst_momentum = std::max(worst_momentum, r.momentum_residual);
        CHECK(r.omega > 0.0);
    }
    CHECK(worst_energy < 1e-12);
    CHECK(worst_momentum < 1e-12);
}

TEST_CASE("a wrong frequency is caught by the residuals") {
    compton::ComptonInput in;
    in.omega0 = kc.m_e * kc.c * kc.c / kc.hbar;
    in.n_dir = {0.0, 0.0, -1.0};
    const auto r = compton::outgoing_momentum(in, in.omega0, kc); // not the solution
    CHECK(r.energy_residual > 1e-3);
}

TEST_CASE("scattering at rest never blue-shifts") {
    compton::ComptonInput in;
    in.omega0 = 2.0 * kc.m_e * kc.c * kc.c / kc.hbar;
    for (int i = 1; i <= 60; ++i) {
        const double theta = std::numbers::pi * i / 60.0;
        in.n_dir = {std::sin(theta), 0.0, std::cos(theta)};
        CHECK(compton::scattered_frequency(in, kc) < in.omega0);
    }
}

TEST_CASE("closed form reproduces the wavelength-shift law at rest") {
    rng::CounterStream s(31, 0);
    for (std::uint64_t i = 0; i < 100; ++i) {
        compton::ComptonInput in;
        in.omega0 = (0.1 + 2.0 * s.uniform(2 * i)) * kc.m_e * kc.c * kc.c / kc.hbar;
        const double theta = std::numbers::pi * s.uniform(2 * i + 1);
        in.n_dir = {std::sin(theta), 0.0, std::cos(theta)};
        const double omega = compton::scattered_frequency(in, kc);
        const double lhs = 1.0 / omega - 1.0 / in.omega0;
        const double rhs = kc.hbar / (kc.m_e * kc.c * kc.c) * (1.0 - std::cos(theta));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        const double dlam = 2.0 * std::numbers::pi * kc.c * lhs;
        CHECK(dlam == doctest::Approx(compton::compton_shift(1.0, theta, kc)).epsilon(1e-12));
    }
}

TEST_CASE("scattered frequency depends only on frame-free scalars") {
    rng::CounterStream s(57, 0);
    compton::ComptonInput in;
    in.omega0 = 1.3 * kc.m_e * kc.c * kc.c / kc.hbar;
    in.k0_dir = random_unit(s, 0);
    in.n_dir = random_unit(s, 2);
    in.p0 = (0.4 * kc.m_e * kc.c) * random_unit(s, 4);
    const double omega = compton::scattered_frequency(in, kc);
    for (std::uint64_t i = 0; i < 50; ++i) {
        const Vec3 axis = random_unit(s, 100 + 3 * i);
        const double angle = 2.0 * std::numbers::pi * s.uniform(100 + 3 * i + 2);
        compton::ComptonInput rotated;
        rotated.omega0 = in.omega0;
        rotated.k0_dir = rotate(in.k0_dir, axis, angle);
        rotated.n_dir = rotate(in.n_dir, axis, angle);
        rotated.p0 = rotate(in.p0, axis, angle);
        CHECK(compton::scattered_frequency(rotated, kc) ==
              doctest::Approx(omega).epsilon(1e-12));
    }
}

TEST_CASE("compton shift values") {
    CHECK(compton::compton_shift(5e-12, 0.0, kc) == 0.0);
    const double quarter = compton::compton_shift(5e-12, std::numbers::pi / 2.0, kc);
    CHECK(std::abs(quarter - 2.4263102e-12) / 2.4263102e-12 < 1e-5);
    CHECK(compton::compton_shift(5e-12, std::numbers::pi, kc) ==
          doctest::Approx(2.0 * quarter).epsilon(1e-12));
    CHECK_THROWS_AS(compton::compton_shift(0.0, 1.0, kc), domain_error);
}

TEST_CASE("inputs are validated") {
    compton::ComptonInput in;
    in.omega0 = 0.0;
    CHECK_THROWS_AS(compton::validate(in), domain_error);
    in.omega0 = 1.0;
    in.k0_dir = {0.0, 0.0, 2.0};
    CHECK_THROWS_AS(compton::validate(in), domain_error);
    in.k0_dir = {0.0, 0.0, 1.0};
    in.n_dir = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(compton::validate(in), domain_error);
}
