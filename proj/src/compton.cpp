#include "waveatom/compton.hpp"

#include "waveatom/errors.hpp"

#include <algorithm>
#include <cmath>

namespace waveatom::compton {

void validate(const ComptonInput& in) {
    if (!(in.omega0 > 0.0)) throw domain_error("ComptonInput: omega0 must be > 0");
    if (std::abs(norm(in.k0_dir) - 1.0) > 1e-12) {
        throw domain_error("ComptonInput: k0_dir must be a unit vector");
    }
    if (std::abs(norm(in.n_dir) - 1.0) > 1e-12) {
        throw domain_error("ComptonInput: n_dir must be a unit vector");
    }
}

double wave_energy(const Vec3& p, const PhysicalConstants& kc) {
    const double cp = kc.c * norm(p);
    const double rest = kc.m_e * kc.c * kc.c;
    return std::hypot(cp, rest);
}

double scattered_frequency(const ComptonInput& in, const PhysicalConstants& kc) {
    validate(in);
    const double e0 = wave_energy(in.p0, kc);
    const Vec3 k0 = (in.omega0 / kc.c) * in.k0_dir;
    const double cos_theta = dot(in.k0_dir, in.n_dir);
    const double numerator = e0 * in.omega0 - kc.c * kc.c * dot(k0, in.p0);
    const double denominator =
        e0 - kc.c * dot(in.p0, in.n_dir) + kc.hbar * in.omega0 * (1.0 - cos_theta);
    if (!(denominator > 0.0) || !(numerator > 0.0)) {
        throw kinematics_error("scattered_frequency: no valid scattered wave for this geometry");
    }
    return numerator / denominator;
}

ComptonResult outgoing_momentum(const ComptonInput& in, double omega, const PhysicalConstants& kc) {
    validate(in);
    ComptonResult r;
    r.omega = omega;
    const Vec3 k0 = (in.omega0 / kc.c) * in.k0_dir;
    r.p = in.p0 + kc.hbar * k0 - (kc.hbar * omega / kc.c) * in.n_dir;

    const double e0 = wave_energy(in.p0, kc);
    const double e = wave_energy(r.p, kc);
    r.energy_residual =
        std::abs(e + kc.hbar * omega - e0 - kc.hbar * in.omega0) / (e0 + kc.hbar * in.omega0);

    const Vec3 before = in.p0 + kc.hbar * k0;
    const Vec3 after = r.p + (kc.hbar * omega / kc.c) * in.n_dir;
    const double scale = norm(in.p0) + kc.hbar * in.omega0 / kc.c;
    const Vec3 d = after - before;
    r.momentum_residual =
        std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)}) / scale;
    return r;
}

ComptonResult solve(const ComptonInput& in, const PhysicalConstants& kc) {
    return outgoing_momentum(in, scattered_frequency(in, kc), kc);
}

double compton_shift(double lambda0, double theta, const PhysicalConstants& kc) {
    if (!(lambda0 > 0.0)) throw domain_error("compton_shift: lambda0 must be > 0");
    return compton_wavelength(kc) * (1.0 - std::cos(theta));
}

} // namespace waveatom::compton
