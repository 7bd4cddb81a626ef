#include "waveatom/spinor.hpp"

#include "waveatom/errors.hpp"

#include <cmath>
#include <string>

namespace waveatom::spinor {

PointDensities pointwise_densities(const Spinor2& chi, const PhysicalConstants& kc) {
    const double n2 = chi.norm2();
    if (!(n2 > 0.0)) throw domain_error("pointwise_densities: zero spinor");
    const std::complex<double> ud = std::conj(chi.up) * chi.down;
    PointDensities d;
    d.rho = -kc.e_charge * n2;
    d.spin_density = {kc.hbar * ud.real(), kc.hbar * ud.imag(),
                      0.5 * kc.hbar * (std::norm(chi.up) - std::norm(chi.down))};
    d.spin_direction = d.spin_density / n2;
    d.magnetization = -(kc.e_charge / (kc.m_e * kc.c)) * d.spin_density;
    return d;
}

PortionSpin portion_spin(const Spinor2& chi, double volume, const PhysicalConstants& kc) {
    if (!(volume >= 0.0)) throw domain_error("portion_spin: volume must be >= 0");
    PortionSpin p;
    if (volume == 0.0) return p;
    const auto d = pointwise_densities(chi, kc);
    p.charge = d.rho * volume;
    p.angular_momentum = volume * d.spin_density;
    p.magnetic_moment = volume * d.magnetization;
    return p;
}

void validate(const SpinorGrid& grid) {
    for (int a = 0; a < 3; ++a) {
        if (grid.shape[static_cast<std::size_t>(a)] == 2) {
            throw config_error("SpinorGrid: axis " + std::to_string(a) +
                               " has 2 samples; differentiated axes need >= 3");
        }
        if (!(grid.spacing[static_cast<std::size_t>(a)] > 0.0)) {
            throw config_error("SpinorGrid: spacing must be > 0");
        }
    }
    if (grid.samples.size() != grid.size()) {
        throw config_error("SpinorGrid: sample count does not match shape");
    }
    if (!grid.vector_potential.empty() && grid.vector_potential.size() != grid.size()) {
        throw config_error("SpinorGrid: vector_potential size does not match shape");
    }
}

namespace {

// Central difference along one axis of an arbitrary per-point value.
// Axes of extent 1 are constant. Periodic wrap by default, second-order
// one-sided stencils at the edges otherwise.
template <typename T, typename Get>
T axis_derivative(const SpinorGrid& grid, const Get& value,
                  std::size_t ix, std::size_t iy, std::size_t iz, int axis) {
    const std::size_t n = grid.shape[static_cast<std::size_t>(axis)];
    if (n < 3) return T{};
    const double h = grid.spacing[static_cast<std::size_t>(axis)];
    std::size_t idx[3] = {ix, iy, iz};
    const std::size_t i = idx[axis];
    auto sample = [&](std::size_t j) {
        idx[axis] = j;
        return value(idx[0], idx[1], idx[2]);
    };
    if (grid.periodic) {
        return (sample((i + 1) % n) - sample((i + n - 1) % n)) / (2.0 * h);
    }
    if (i == 0) return (-3.0 * sample(0) + 4.0 * sample(1) - sample(2)) / (2.0 * h);
    if (i == n - 1) return (3.0 * sample(n - 1) - 4.0 * sample(n - 2) + sample(n - 3)) / (2.0 * h);
    return (sample(i + 1) - sample(i - 1)) / (2.0 * h);
}

} // namespace

CurrentFields current_on_grid(const SpinorGrid& grid, const PhysicalConstants& kc) {
    validate(grid);
    const std::size_t total = grid.size();

    // Magnetization field: m = -(e hbar / (2 m_e c)) chi† sigma chi,
    // nonzero spinors not required here (m = 0 where chi = 0).
    std::vector<Vec3> mag(total);
    for (std::size_t i = 0; i < total; ++i) {
        const Spinor2& chi = grid.samples[i];
        const std::complex<double> ud = std::conj(chi.up) * chi.down;
        const Vec3 s = {kc.hbar * ud.real(), kc.hbar * ud.imag(),
                        0.5 * kc.hbar * (std::norm(chi.up) - std::norm(chi.down))};
        mag[i] = -(kc.e_charge / (kc.m_e * kc.c)) * s;
    }

    CurrentFields out;
    out.total.resize(total);
    out.convective.resize(total);
    out.spin.resize(total);

    const double conv_scale = -kc.e_charge * kc.hbar / kc.m_e;
    const double a_scale = -kc.e_charge * kc.e_charge / (kc.m_e * kc.c);

    auto up_at = [&](std::size_t x, std::size_t y, std::size_t z) { return grid.at(x, y, z).up; };
    auto down_at = [&](std::size_t x, std::size_t y, std::size_t z) { return grid.at(x, y, z).down; };
    auto mx = [&](std::size_t x, std::size_t y, std::size_t z) { return mag[grid.index(x, y, z)].x; };
    auto my = [&](std::size_t x, std::size_t y, std::size_t z) { return mag[grid.index(x, y, z)].y; };
    auto mz = [&](std::size_t x, std::size_t y, std::size_t z) { return mag[grid.index(x, y, z)].z; };

    for (std::size_t iz = 0; iz < grid.shape[2]; ++iz) {
        for (std::size_t iy = 0; iy < grid.shape[1]; ++iy) {
            for (std::size_t ix = 0; ix < grid.shape[0]; ++ix) {
                const std::size_t i = grid.index(ix, iy, iz);
                const Spinor2& chi = grid.samples[i];

                Vec3 jc;
                for (int axis = 0; axis < 3; ++axis) {
                    const auto dup =
                        axis_derivative<std::complex<double>>(grid, up_at, ix, iy, iz, axis);
                    const auto ddown =
                        axis_derivative<std::complex<double>>(grid, down_at, ix, iy, iz, axis);
                    const double im =
                        (std::conj(chi.up) * dup + std::conj(chi.down) * ddown).imag();
                    const double v = conv_scale * im;
                    if (axis == 0) jc.x = v;
                    else if (axis == 1) jc.y = v;
                    else jc.z = v;
                }
                if (!grid.vector_potential.empty()) {
                    jc = jc + (a_scale * chi.norm2()) * grid.vector_potential[i];
                }

                const Vec3 curl_m = {
                    axis_derivative<double>(grid, mz, ix, iy, iz, 1) -
                        axis_derivative<double>(grid, my, ix, iy, iz, 2),
                    axis_derivative<double>(grid, mx, ix, iy, iz, 2) -
                        axis_derivative<double>(grid, mz, ix, iy, iz, 0),
                    axis_derivative<double>(grid, my, ix, iy, iz, 0) -
                        axis_derivative<double>(grid, mx, ix, iy, iz, 1),
                };
                const Vec3 js = kc.c * curl_m;

                out.convective[i] = jc;
                out.spin[i] = js;
                out.total[i] = jc + js;
            }
        }
    }
    return out;
}

} // namespace waveatom::spinor
