// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "waveatom/analysis.hpp"
#include "waveatom/compton.hpp"
#include "waveatom/constants.hpp"
#include "waveatom/detector.hpp"
#include "waveatom/errors.hpp"
#include "waveatom/fields.hpp"
#include "waveatom/matterwave.hpp"
#include "waveatom/rates.hpp"
#include "waveatom/rng.hpp"
#include "waveatom/spinor.hpp"
#include "waveatom/wavepacket.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace waveatom;

namespace {

const PhysicalConstants& kc = PhysicalConstants::codata2014();

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> check;
};

Vec3 random_unit(rng::CounterStream& s, std::uint64_t base) {
    const double z = 2.0 * s.uniform(base) - 1.0;
    const double phi = 2.0 * std::numbers::pi * s.uniform(base + 1);
    const double r = std::sqrt(1.0 - z * z);
    return {r * std::cos(phi), r * std::sin(phi), z};
}

struct SimSummary {
    double chi2_per_dof;
    double rmse_vs_born;
    double rmse_vs_tau;
};

// Fixed-seed double-slit run with several statistical realizations,
// pooled chi-square plus RMSE of the averaged normalized histograms.
SimSummary averaged_run(double tau, std::uint64_t seed) {
    const fields::FringeGeometry geom{0.03, 5.0};
    const double lz = 300.0, ly = 100.0;
    const auto field = fields::IntensityField::double_slit(geom, -0.5 * lz, 0.5 * lz);
    const int realizations = 10, bins = 100;

    std::vector<analysis::Histogram> hists;
    for (int r = 0; r < realizations; ++r) {
        const auto screen = detector::generate_screen(
            lz, ly, 1.0, rng::derive_seed(seed, static_cast<std::uint64_t>(r)));
        const auto snaps = detector::run_exposure(screen, field, {{tau}});
        hists.push_back(analysis::histogram(snaps.front(), -0.5 * lz, 0.5 * lz, bins));
    }
    analysis::Histogram pooled = hists.front();
    for (std::size_t r = 1; r < hists.size(); ++r) {
        for (std::size_t k = 0; k < pooled.counts.size(); ++k) {
            pooled.counts[k] += hists[r].counts[k];
        }
    }
    const auto averaged = analysis::average_normalized(hists);
    const auto centers = pooled.centers();
    const auto born = analysis::theoretical_curve(field, 0.0, centers);
    const auto saturated = analysis::theoretical_curve(field, tau, centers);
    const auto fit = analysis::goodness_of_fit(pooled, born);
    return {fit.chi_square / fit.dof, analysis::rmse(averaged, born),
            analysis::rmse(averaged, saturated)};
}

bool criterion_mass_frequency(std::string& detail) {
    const double m = electron_mass_from_frequency(7.763440716e20, kc);
    const double rel = std::abs(m - 9.10938356e-31) / 9.10938356e-31;
    detail = "m_e = " + std::to_string(m * 1e31) + "e-31 kg, rel err " + std::to_string(rel);
    return rel < 5e-9;
}

bool criterion_born_limit(std::string& detail) {
    const auto s = averaged_run(0.1, 101);
    std::ostringstream os;
    os << "chi2/dof = " << s.chi2_per_dof << " (< 2), rmse = " << s.rmse_vs_born << " (< 0.06)";
    detail = os.str();
    return s.chi2_per_dof < 2.0 && s.rmse_vs_born < 0.06;
}

bool criterion_long_exposure(std::string& detail) {
    const auto s = averaged_run(5.0, 202);
    // the two theoretical curves must themselves be distinguishable
    const auto field = fields::IntensityField::double_slit({0.03, 5.0}, -150.0, 150.0);
    double max_gap = 0.0;
    for (int i = 0; i <= 3000; ++i) {
        const double z = -150.0 + 0.1 * i;
        max_gap = std::max(max_gap, std::abs(rates::detection_ratio(field(z), 5.0) - field(z)));
    }
    std::ostringstream os;
    os << "rmse vs tau-curve " << s.rmse_vs_tau << " < rmse vs Born " << s.rmse_vs_born
       << ", curve gap " << max_gap << " (> 0.1)";
    detail = os.str();
    return s.rmse_vs_tau < s.rmse_vs_born && max_gap > 0.1;
}

bool criterion_count_ladder(std::string& detail) {
    const fields::FringeGeometry geom{0.03, 5.0};
    const auto cal = analysis::calibrate_window(geom, 1.0, 3452.0, 30.0, 14530.0);

    const double e01 = cal.atom_count * analysis::expected_fraction(geom, 0.1, cal.half_width);
    const double e10 = cal.atom_count * analysis::expected_fraction(geom, 10.0, cal.half_width);
    const bool semianalytic_ok =
        std::abs(e01 / 424.0 - 1.0) <= 0.10 && std::abs(e10 / 11600.0 - 1.0) <= 0.10;

    const auto field =
        fields::IntensityField::double_slit(geom, -cal.half_width, cal.half_width);
    const auto screen =
        detector::generate_screen(2.0 * cal.half_width, cal.height, 1.0, 777);
    const auto snaps = detector::run_exposure(screen, field, {{0.1, 1.0, 10.0, 30.0}});
    const double mc01 = static_cast<double>(snaps[0].count());
    const double mc10 = static_cast<double>(snaps[2].count());
    const bool mc_ok = std::abs(mc01 / 424.0 - 1.0) <= 0.15 && std::abs(mc10 / 11600.0 - 1.0) <= 0.15;

    std::ostringstream os;
    os << "Z = " << cal.half_width << ", N = " << cal.atom_count << "; expected(0.1) = " << e01
       << " vs 424, expected(10) = " << e10 << " vs 11600; MC = " << mc01 << ", " << mc10;
    detail = os.str();
    return semianalytic_ok && mc_ok;
}

bool criterion_compton(std::string& detail) {
    compton::ComptonInput back;
    back.omega0 = kc.m_e * kc.c * kc.c / kc.hbar;
    back.n_dir = {0.0, 0.0, -1.0};
    const double ratio = compton::scattered_frequency(back, kc) / back.omega0;
    const bool third = std::abs(ratio - 1.0 / 3.0) < 1e-12;

    const double dlam = compton::compton_shift(1.0e-11, std::numbers::pi / 2.0, kc);
    const bool shift_ok = std::abs(dlam - 2.4263102e-12) / 2.4263102e-12 < 1e-5;

    rng::CounterStream s(424242, 0);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const std::uint64_t base = 100 * i;
        compton::ComptonInput in;
        in.omega0 = (0.05 + 3.0 * s.uniform(base + 8)) * kc.m_e * kc.c * kc.c / kc.hbar;
        in.k0_dir = random_unit(s, base);
        in.n_dir = random_unit(s, base + 2);
        in.p0 = (s.uniform(base + 6) * kc.m_e * kc.c) * random_unit(s, base + 4);
        const auto r = compton::solve(in, kc);
        worst = std::max({worst, r.energy_residual, r.momentum_residual});
    }
    std::ostringstream os;
    os << "omega/omega0 = " << ratio << ", dlambda(pi/2) = " << dlam
       << ", worst residual = " << worst;
    detail = os.str();
    return third && shift_ok && worst < 1e-12;
}

bool criterion_spin(std::string& detail) {
    const double gamma_e = -kc.e_charge / (kc.m_e * kc.c);
    double worst_len = 0.0, worst_gyro = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        rng::CounterStream s(6060, i);
        auto gauss = [&](std::uint64_t d) {
            return std::sqrt(-2.0 * std::log(s.uniform(2 * d))) *
                   std::cos(2.0 * std::numbers::pi * s.uniform(2 * d + 1));
        };
        const spinor::Spinor2 chi{{gauss(0), gauss(1)}, {gauss(2), gauss(3)}};
        const auto d = spinor::pointwise_densities(chi, kc);
        worst_len = std::max(worst_len,
                             std::abs(norm(d.spin_direction) - 0.5 * kc.hbar) / kc.hbar);

        // independent spin density: literal sigma-matrix bilinears
        const std::complex<double> ud = std::conj(chi.up) * chi.down;
        const std::complex<double> du = std::conj(chi.down) * chi.up;
        const Vec3 s_indep = 0.5 * kc.hbar *
                             Vec3{(ud + du).real(), (std::complex<double>(0, 1) * (du - ud)).real(),
                                  std::norm(chi.up) - std::norm(chi.down)};
        const Vec3 m_expect = gamma_e * s_indep;
        const double scale = norm(m_expect);
        worst_gyro = std::max({worst_gyro,
                               std::abs(d.magnetization.x - m_expect.x) / scale,
                               std::abs(d.magnetization.y - m_expect.y) / scale,
                               std::abs(d.magnetization.z - m_expect.z) / scale});
    }
    std::ostringstream os;
    os << "worst |S|-hbar/2 = " << worst_len << " hbar, worst gyro residual = " << worst_gyro;
    detail = os.str();
    return worst_len < 1e-12 && worst_gyro < 1e-12;
}

bool criterion_plane_wave(std::string& detail) {
    rng::CounterStream s(7070, 0);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const std::uint64_t base = 10 * i;
        const double mag = (3.0 * s.uniform(base) + 1e-3) * kc.omega_e / kc.c;
        const Vec3 k = mag * random_unit(s, base + 1);
        const auto state = matterwave::make_plane_wave(
            std::sqrt(4.0 * s.uniform(base + 3) + 0.1), k, kc.omega_e, kc);
        const auto p = matterwave::portion(state, 0.5 + 2.0 * s.uniform(base + 4), kc);
        worst = std::max(worst, matterwave::mass_shell_residual(p, kc));
    }

    const auto slow = matterwave::make_plane_wave(1.0, {1e-6 * kc.omega_e / kc.c, 0.0, 0.0},
                                                  kc.omega_e, kc);
    const auto d = matterwave::plane_wave_densities(slow, kc);
    const double longwave_dev = std::abs(d.rho + kc.e_charge) / kc.e_charge;

    std::ostringstream os;
    os << "worst mass-shell residual = " << worst << ", long-wave rho deviation = "
       << longwave_dev;
    detail = os.str();
    return worst < 1e-12 && longwave_dev < 1e-11;
}

bool criterion_uncertainty(std::string& detail) {
    const auto g = packet::rms_widths(packet::build_gaussian_packet(1.0, 0.0, {4096, 40.0}));
    const bool gauss_ok = g.product >= 0.4975 && g.product <= 0.5025;

    const auto h = packet::rms_widths(packet::build_hann_packet(10.0, 0.0, {4096, 40.0}));
    // quadrature oracle: x^2 moment of cos^4 and the derivative norm
    const int n = 20000;
    const double w = 10.0, step = w / n;
    double w0 = 0.0, wx2 = 0.0, wd = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = -0.5 * w + step * i;
        const double coeff = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double c = std::cos(std::numbers::pi * x / w);
        const double dpsi = -2.0 * c * std::sin(std::numbers::pi * x / w) * std::numbers::pi / w;
        w0 += coeff * c * c * c * c;
        wx2 += coeff * x * x * c * c * c * c;
        wd += coeff * dpsi * dpsi;
    }
    const double oracle = std::sqrt(wx2 / w0) * std::sqrt(wd / w0);
    const bool hann_ok = h.product > 0.5 && std::abs(h.product - oracle) / oracle < 0.01;
    const bool parseval_ok = g.parseval_residual < 1e-10 && h.parseval_residual < 1e-10;

    std::ostringstream os;
    os << "gaussian product = " << g.product << ", hann product = " << h.product
       << " (oracle " << oracle << "), parseval " << std::max(g.parseval_residual,
                                                              h.parseval_residual);
    detail = os.str();
    return gauss_ok && hann_ok && parseval_ok;
}

bool criterion_cross_section(std::string& detail) {
    // independent arithmetic in extended precision
    const long double pi_l = 3.14159265358979323846264338327950288L;
    const long double expected_l = 4.0L * pi_l * 0.555L * std::log(2.0L);
    const double got = rates::hydrogen_excitation_cross_section(1.0);
    const double rel = std::abs(got - static_cast<double>(expected_l)) /
                       static_cast<double>(expected_l);

    bool threshold_ok = false;
    const double near = rates::hydrogen_excitation_cross_section(std::sqrt(0.50 + 1e-9));
    try {
        rates::hydrogen_excitation_cross_section(std::sqrt(0.25));
    } catch (const domain_error&) {
        threshold_ok = near > 0.0 && near < 1e-6;
    }
    std::ostringstream os;
    os << "sigma2(1) = " << got << ", rel err " << rel << ", sigma2(0.5+1e-9) = " << near;
    detail = os.str();
    return rel < 1e-12 && threshold_ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"mass-frequency identity", criterion_mass_frequency},
        {"Born-limit buildup (tau = 0.1, 10 realizations)", criterion_born_limit},
        {"long-exposure deviation (tau = 5)", criterion_long_exposure},
        {"count ladder calibration", criterion_count_ladder},
        {"Compton closed form and conservation", criterion_compton},
        {"spin invariants", criterion_spin},
        {"plane-wave identities", criterion_plane_wave},
        {"uncertainty products", criterion_uncertainty},
        {"excitation cross-section value", criterion_cross_section},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%zu/%zu] %-48s %s  (%.2fs)  %s\n", i + 1, criteria.size(),
                    criteria[i].name.c_str(), ok ? "PASS" : "FAIL", dt, detail.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
