#include "waveatom/analysis.hpp"
#include "waveatom/compton.hpp"
#include "waveatom/constants.hpp"
#include "waveatom/detector.hpp"
#include "waveatom/errors.hpp"
#include "waveatom/fields.hpp"
#include "waveatom/matterwave.hpp"
#include "waveatom/rates.hpp"
#include "waveatom/spinor.hpp"
#include "waveatom/wavepacket.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

namespace py = pybind11;
using namespace waveatom;

namespace {

Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

std::array<double, 3> from_vec3(const Vec3& v) { return {v.x, v.y, v.z}; }

fields::IntensityField make_field(double c1, double r, double z_min, double z_max) {
    return fields::IntensityField::double_slit({c1, r}, z_min, z_max);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Continuous-wave detection statistics, matter-wave and spinor densities, "
              "Compton kinematics, and wave-packet uncertainty products";

    py::register_exception<config_error>(m, "ConfigError");
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<kinematics_error>(m, "KinematicsError", PyExc_ValueError);
    py::register_exception<resolution_error>(m, "ResolutionError", PyExc_ValueError);

    // constants
    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<double, double, double, double>(), py::arg("hbar"), py::arg("c"),
             py::arg("e_charge"), py::arg("omega_e"))
        .def_readonly("hbar", &PhysicalConstants::hbar)
        .def_readonly("c", &PhysicalConstants::c)
        .def_readonly("e_charge", &PhysicalConstants::e_charge)
        .def_readonly("omega_e", &PhysicalConstants::omega_e)
        .def_readonly("m_e", &PhysicalConstants::m_e);
    m.def("constants", [] { return PhysicalConstants::codata2014(); },
          py::return_value_policy::copy);
    m.def("constants_version", &constants_version);
    m.def("electron_mass_from_frequency",
          [](double omega) { return electron_mass_from_frequency(omega); }, py::arg("omega"));
    m.def("compton_wavelength", [] { return compton_wavelength(); });

    // fields
    m.def("double_slit_intensity",
          [](double z, double c1, double r) {
              return fields::double_slit_intensity(z, {c1, r});
          },
          py::arg("z"), py::arg("c1") = 0.03, py::arg("r") = 5.0);

    // rates
    m.def("excitation_rate", &rates::excitation_rate, py::arg("b"), py::arg("intensity"));
    m.def("survival_probability",
          [](double w, double t) { return rates::survival_probability(w, t); }, py::arg("w"),
          py::arg("t"));
    m.def("cumulative_excitation_probability", &rates::cumulative_excitation_probability,
          py::arg("rel_intensity"), py::arg("tau"));
    m.def("detection_ratio", &rates::detection_ratio, py::arg("rel_intensity"), py::arg("tau"));
    m.def("hydrogen_excitation_cross_section", &rates::hydrogen_excitation_cross_section,
          py::arg("v"));
    m.def("rate_coefficient", &rates::rate_coefficient, py::arg("sigma"), py::arg("v"),
          py::arg("n0"));

    // detector + analysis
    py::class_<detector::AtomScreen>(m, "AtomScreen")
        .def_readonly("z", &detector::AtomScreen::z)
        .def_readonly("y", &detector::AtomScreen::y)
        .def_readonly("seed", &detector::AtomScreen::seed)
        .def("__len__", &detector::AtomScreen::size);
    py::class_<detector::Snapshot>(m, "Snapshot")
        .def_readonly("tau", &detector::Snapshot::tau)
        .def_readonly("z", &detector::Snapshot::z)
        .def_readonly("y", &detector::Snapshot::y)
        .def("count", &detector::Snapshot::count);
    m.def("generate_screen", &detector::generate_screen, py::arg("lz"), py::arg("ly"),
          py::arg("density"), py::arg("seed"));
    m.def("run_double_slit_exposure",
          [](const detector::AtomScreen& screen, double c1, double r,
             const std::vector<double>& taus, const std::string& mode, double literal_dtau,
             int threads) {
              const auto field = make_field(c1, r, -0.5 * screen.window.lz, 0.5 * screen.window.lz);
              detector::ExposureOptions options;
              options.mode = detector::exposure_mode_from_name(mode);
              options.literal_dtau = literal_dtau;
              options.threads = threads;
              return detector::run_exposure(screen, field, {taus}, options);
          },
          py::arg("screen"), py::arg("c1"), py::arg("r"), py::arg("taus"),
          py::arg("mode") = "exact_exponential", py::arg("literal_dtau") = 0.01,
          py::arg("threads") = 1);
    m.def("expected_count",
          [](const detector::AtomScreen& screen, double c1, double r, double tau) {
              const auto field = make_field(c1, r, -0.5 * screen.window.lz, 0.5 * screen.window.lz);
              return analysis::expected_count(field, screen, tau);
          },
          py::arg("screen"), py::arg("c1"), py::arg("r"), py::arg("tau"));

    // matterwave
    m.def("dispersion",
          [](const std::array<double, 3>& k, double omega_e) {
              const auto d = matterwave::dispersion(to_vec3(k), omega_e);
              return py::make_tuple(d.omega, d.omega_longwave, d.relative_gap);
          },
          py::arg("k"), py::arg("omega_e"));
    m.def("plane_wave_densities",
          [](std::complex<double> amplitude, const std::array<double, 3>& k, double omega_e) {
              const auto state = matterwave::make_plane_wave(amplitude, to_vec3(k), omega_e);
              const auto d = matterwave::plane_wave_densities(state);
              py::dict out;
              out["omega"] = state.omega;
              out["rho"] = d.rho;
              out["current"] = from_vec3(d.current);
              out["energy"] = d.energy;
              out["momentum"] = from_vec3(d.momentum);
              return out;
          },
          py::arg("amplitude"), py::arg("k"), py::arg("omega_e"));
    m.def("portion",
          [](std::complex<double> amplitude, const std::array<double, 3>& k, double omega_e,
             double volume) {
              const auto state = matterwave::make_plane_wave(amplitude, to_vec3(k), omega_e);
              const auto p = matterwave::portion(state, volume);
              py::dict out;
              out["Z"] = p.Z;
              out["charge"] = p.charge;
              out["energy"] = p.energy;
              out["momentum"] = from_vec3(p.momentum);
              out["rest_mass"] = p.rest_mass;
              out["mass_shell_residual"] = matterwave::mass_shell_residual(p);
              return out;
          },
          py::arg("amplitude"), py::arg("k"), py::arg("omega_e"), py::arg("volume"));

    // spinor
    m.def("pointwise_densities",
          [](std::complex<double> up, std::complex<double> down) {
              const auto d = spinor::pointwise_densities({up, down});
              py::dict out;
              out["rho"] = d.rho;
              out["s"] = from_vec3(d.spin_density);
              out["S"] = from_vec3(d.spin_direction);
              out["m"] = from_vec3(d.magnetization);
              return out;
          },
          py::arg("up"), py::arg("down"));
    m.def("portion_spin",
          [](std::complex<double> up, std::complex<double> down, double volume) {
              const auto p = spinor::portion_spin({up, down}, volume);
              py::dict out;
              out["charge"] = p.charge;
              out["angular_momentum"] = from_vec3(p.angular_momentum);
              out["magnetic_moment"] = from_vec3(p.magnetic_moment);
              return out;
          },
          py::arg("up"), py::arg("down"), py::arg("volume"));

    // compton
    m.def("scattered_frequency",
          [](double omega0, const std::array<double, 3>& k0_dir, const std::array<double, 3>& p0,
             const std::array<double, 3>& n_dir) {
              return compton::scattered_frequency({omega0, to_vec3(k0_dir), to_vec3(p0),
                                                   to_vec3(n_dir)});
          },
          py::arg("omega0"), py::arg("k0_dir"), py::arg("p0"), py::arg("n_dir"));
    m.def("compton_solve",
          [](double omega0, const std::array<double, 3>& k0_dir, const std::array<double, 3>& p0,
             const std::array<double, 3>& n_dir) {
              const auto r = compton::solve({omega0, to_vec3(k0_dir), to_vec3(p0), to_vec3(n_dir)});
              py::dict out;
              out["omega"] = r.omega;
              out["p"] = from_vec3(r.p);
              out["energy_residual"] = r.energy_residual;
              out["momentum_residual"] = r.momentum_residual;
              return out;
          },
          py::arg("omega0"), py::arg("k0_dir"), py::arg("p0"), py::arg("n_dir"));
    m.def("compton_shift", [](double lambda0, double theta) {
        return compton::compton_shift(lambda0, theta);
    }, py::arg("lambda0"), py::arg("theta"));

    // wavepacket
    auto widths_dict = [](const packet::Widths& w) {
        py::dict out;
        out["delta_x"] = w.delta_x;
        out["delta_k"] = w.delta_k;
        out["product"] = w.product;
        out["eps_grid"] = w.eps_grid;
        out["parseval_residual"] = w.parseval_residual;
        out["spectral_centroid"] = w.spectral_centroid;
        return out;
    };
    m.def("gaussian_packet_widths",
          [widths_dict](double sigma, double k_center, std::size_t n, double extent) {
              const auto p = packet::build_gaussian_packet(sigma, k_center, {n, extent});
              return widths_dict(packet::rms_widths(p));
          },
          py::arg("sigma") = 1.0, py::arg("k_center") = 0.0, py::arg("n") = 4096,
          py::arg("extent") = 40.0);
    m.def("hann_packet_widths",
          [widths_dict](double width, double k_center, std::size_t n, double extent) {
              const auto p = packet::build_hann_packet(width, k_center, {n, extent});
              return widths_dict(packet::rms_widths(p));
          },
          py::arg("width") = 10.0, py::arg("k_center") = 0.0, py::arg("n") = 4096,
          py::arg("extent") = 40.0);
}
