#pragma once

#include "waveatom/constants.hpp"
#include "waveatom/vec3.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace waveatom::spinor {

/// Two-component spinor sample (psi_up, psi_down).
struct Spinor2 {
    std::complex<double> up{0.0, 0.0};
    std::complex<double> down{0.0, 0.0};

    double norm2() const { return std::norm(up) + std::norm(down); }
};

/// Point densities of the two-component field:
///   rho = -e chi†chi                s = (hbar/2) chi†(sigma)chi
///   S   = s / (chi†chi)             m = -(e/(m_e c)) s
/// |S| = hbar/2 for every nonzero spinor; |m|/|s| is twice the orbital
/// charge-to-moment ratio.
struct PointDensities {
    double rho = 0.0;
    Vec3 spin_density;      ///< s
    Vec3 spin_direction;    ///< S, length hbar/2
    Vec3 magnetization;     ///< m
};

PointDensities pointwise_densities(const Spinor2& chi,
                                   const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// Charge, intrinsic angular momentum, and magnetic moment carried by a
/// volume element dV: dq = rho dV, dL_s = s dV, dmu = m dV. The
/// identities dmu = gamma_e dL_s (gamma_e = -e/(m_e c)) and
/// |dL_s| = (hbar/2)|dq|/e hold for every spinor.
struct PortionSpin {
    double charge = 0.0;
    Vec3 angular_momentum;
    Vec3 magnetic_moment;
};

PortionSpin portion_spin(const Spinor2& chi, double volume,
                         const PhysicalConstants& kc = PhysicalConstants::codata2014());

/// Spinor samples on a regular grid, x-fastest storage order
/// (index = (iz*ny + iy)*nx + ix). An axis of extent 1 is treated as
/// constant (no derivative along it); axes of extent 2 are rejected.
struct SpinorGrid {
    std::array<std::size_t, 3> shape{1, 1, 1};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    std::vector<Spinor2> samples;
    std::vector<Vec3> vector_potential; ///< empty = no A field
    bool periodic = true;

    std::size_t size() const { return shape[0] * shape[1] * shape[2]; }
    std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return (iz * shape[1] + iy) * shape[0] + ix;
    }
    Spinor2& at(std::size_t ix, std::size_t iy, std::size_t iz) {
        return samples[index(ix, iy, iz)];
    }
    const Spinor2& at(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return samples[index(ix, iy, iz)];
    }
};

void validate(const SpinorGrid& grid);

/// Electric current decomposition on the grid:
///   j_convective = -(e hbar/m_e) Im(chi† grad chi) - (e^2/(m_e c)) A chi†chi
///   j_spin       = c curl(m)
///   j_total      = j_convective + j_spin
/// Spatial derivatives are second-order central differences, periodic
/// wrap by default, one-sided at the edges when periodic = false.
struct CurrentFields {
    std::vector<Vec3> total;
    std::vector<Vec3> convective;
    std::vector<Vec3> spin;
};

CurrentFields current_on_grid(const SpinorGrid& grid,
                              const PhysicalConstants& kc = PhysicalConstants::codata2014());

} // namespace waveatom::spinor
