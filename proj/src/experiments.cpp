#include "waveatom/experiments.hpp"

#include "waveatom/analysis.hpp"
#include "waveatom/compton.hpp"
#include "waveatom/constants.hpp"
#include "waveatom/detector.hpp"
#include "waveatom/errors.hpp"
#include "waveatom/fields.hpp"
#include "waveatom/io.hpp"
#include "waveatom/matterwave.hpp"
#include "waveatom/rates.hpp"
#include "waveatom/rng.hpp"
#include "waveatom/spinor.hpp"
#include "waveatom/wavepacket.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

namespace waveatom::experiments {

using nlohmann::json;

namespace {

constexpr const char* kOutputDirEnv = "WAVEATOM_OUT_DIR";

json default_params(const std::string& experiment) {
    if (experiment == "double_slit_buildup") {
        return {{"c1", 0.03},
                {"r", 5.0},
                {"lz", 300.0},
                {"ly", 100.0},
                {"density", 1.0},
                {"exposures", json::array({0.02, 0.1, 1.0, 10.0, 30.0})},
                {"bins", 100},
                {"mode", "exact_exponential"},
                {"literal_dtau", 0.01},
                {"pgm_scale", 1.0},
                // optional {tau_a, count_a, tau_b, count_b}: size the window
                // so the expected counts hit two reference values
                {"calibrate", nullptr}};
    }
    if (experiment == "born_deviation") {
        return {{"c1", 0.03},
                {"r", 5.0},
                {"lz", 300.0},
                {"ly", 100.0},
                {"density", 1.0},
                {"tau", 0.1},
                {"realizations", 10},
                {"bins", 100},
                {"mode", "exact_exponential"},
                {"literal_dtau", 0.01}};
    }
    if (experiment == "matterwave_sweep") {
        return {{"ck_min", 1e-3},
                {"ck_max", 10.0},
                {"points", 121},
                {"log_scale", true},
                {"amplitude_sq", 1.0}};
    }
    if (experiment == "spin_check") {
        return {{"samples", 10000},
                {"grid_csv", ""},
                {"grid_spacing", json::array({1.0, 1.0, 1.0})},
                {"grid_periodic", true}};
    }
    if (experiment == "compton_sweep") {
        return {{"photon_energy_ratio", 1.0},
                {"p0_over_mec", json::array({0.0, 0.0, 0.0})},
                {"theta_points", 181}};
    }
    if (experiment == "packet_widths") {
        return {{"shape", "gaussian"},
                {"sigma", 1.0},
                {"width", 10.0},
                {"k_center", 0.0},
                {"n", 4096},
                {"extent", 40.0},
                {"axis", "space"}};
    }
    if (experiment == "xsec") {
        return {{"v2_min", 0.55}, {"v2_max", 4.0}, {"points", 70}, {"n0", 10000.0}};
    }
    throw config_error("unknown experiment '" + experiment + "'");
}

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw config_error("config field '" + field + "': " + why);
}

double require_positive(const json& params, const std::string& field) {
    const double v = params.at(field).get<double>();
    if (!(v > 0.0)) bad_field(field, "must be > 0");
    return v;
}

int require_int(const json& params, const std::string& field, int minimum) {
    const auto& v = params.at(field);
    if (!v.is_number_integer()) bad_field(field, "must be an integer");
    const int n = v.get<int>();
    if (n < minimum) bad_field(field, "must be >= " + std::to_string(minimum));
    return n;
}

void check_vector3(const json& params, const std::string& field) {
    const auto& a = params.at(field);
    if (!a.is_array() || a.size() != 3) bad_field(field, "must be an array of 3 numbers");
    for (const auto& v : a) {
        if (!v.is_number()) bad_field(field, "must be an array of 3 numbers");
    }
}

void check_params(const std::string& experiment, const json& params) {
    if (experiment == "double_slit_buildup" || experiment == "born_deviation") {
        require_positive(params, "c1");
        if (!(params.at("r").get<double>() >= 0.0)) bad_field("r", "must be >= 0");
        require_positive(params, "lz");
        require_positive(params, "ly");
        require_positive(params, "density");
        require_int(params, "bins", 1);
        detector::exposure_mode_from_name(params.at("mode").get<std::string>());
        require_positive(params, "literal_dtau");
        if (experiment == "double_slit_buildup") {
            const auto& taus = params.at("exposures");
            if (!taus.is_array() || taus.empty()) bad_field("exposures", "must be a nonempty array");
            double prev = -1.0;
            for (const auto& t : taus) {
                if (!t.is_number() || !(t.get<double>() >= 0.0)) {
                    bad_field("exposures", "entries must be numbers >= 0");
                }
                if (!(t.get<double>() > prev)) bad_field("exposures", "must be strictly increasing");
                prev = t.get<double>();
            }
            require_positive(params, "pgm_scale");
            const auto& cal = params.at("calibrate");
            if (!cal.is_null()) {
                if (!cal.is_object()) bad_field("calibrate", "must be an object or null");
                for (const auto& key : {"tau_a", "count_a", "tau_b", "count_b"}) {
                    if (!cal.contains(key) || !cal.at(key).is_number()) {
                        bad_field(std::string("calibrate.") + key, "must be a number");
                    }
                }
                for (const auto& [key, value] : cal.items()) {
                    if (key != "tau_a" && key != "count_a" && key != "tau_b" && key != "count_b") {
                        bad_field("calibrate." + key, "unknown key");
                    }
                }
                if (!(cal.at("tau_a").get<double>() > 0.0 &&
                      cal.at("tau_b").get<double>() > cal.at("tau_a").get<double>() &&
                      cal.at("count_a").get<double>() > 0.0 &&
                      cal.at("count_b").get<double>() > cal.at("count_a").get<double>())) {
                    bad_field("calibrate", "needs 0 < tau_a < tau_b and 0 < count_a < count_b");
                }
                if (params.at("density").get<double>() != 1.0) {
                    bad_field("calibrate", "window calibration assumes density = 1");
                }
            }
        } else {
            if (!(params.at("tau").get<double>() >= 0.0)) bad_field("tau", "must be >= 0");
            require_int(params, "realizations", 1);
        }
    } else if (experiment == "matterwave_sweep") {
        const double lo = require_positive(params, "ck_min");
        const double hi = require_positive(params, "ck_max");
        if (!(hi >= lo)) bad_field("ck_max", "must be >= ck_min");
        const int points = require_int(params, "points", 1);
        if (points < 2 && hi > lo) bad_field("points", "must be >= 2 for a sweep");
        require_positive(params, "amplitude_sq");
    } else if (experiment == "spin_check") {
        require_int(params, "samples", 1);
        check_vector3(params, "grid_spacing");
        for (const auto& v : params.at("grid_spacing")) {
            if (!(v.get<double>() > 0.0)) bad_field("grid_spacing", "entries must be > 0");
        }
    } else if (experiment == "compton_sweep") {
        require_positive(params, "photon_energy_ratio");
        check_vector3(params, "p0_over_mec");
        require_int(params, "theta_points", 2);
    } else if (experiment == "packet_widths") {
        const auto shape = params.at("shape").get<std::string>();
        if (shape != "gaussian" && shape != "hann") {
            bad_field("shape", "must be 'gaussian' or 'hann'");
        }
        require_positive(params, "sigma");
        require_positive(params, "width");
        require_positive(params, "extent");
        const int n = require_int(params, "n", 16);
        if ((n & (n - 1)) != 0) bad_field("n", "must be a power of two >= 16");
        const auto axis = params.at("axis").get<std::string>();
        if (axis != "space" && axis != "time") bad_field("axis", "must be 'space' or 'time'");
    } else if (experiment == "xsec") {
        const double lo = params.at("v2_min").get<double>();
        if (!(lo > 0.50)) bad_field("v2_min", "must be > 0.50 (excitation threshold)");
        if (!(params.at("v2_max").get<double>() >= lo)) bad_field("v2_max", "must be >= v2_min");
        require_int(params, "points", 1);
        if (!(params.at("n0").get<double>() >= 1.0)) bad_field("n0", "must be >= 1");
    }
}

bool same_kind(const json& a, const json& b) {
    if (a.is_number() && b.is_number()) return true;
    if (b.is_null()) return true; // optional slot, validated downstream
    return a.type() == b.type();
}

RunConfig build_config(const std::string& experiment, const json& user) {
    json params = default_params(experiment);
    for (const auto& [key, value] : user.items()) {
        if (!params.contains(key)) {
            throw config_error("unknown config key '" + key + "' for experiment '" + experiment +
                               "'");
        }
        if (!same_kind(value, params.at(key))) bad_field(key, "has the wrong type");
        params[key] = value;
    }
    check_params(experiment, params);
    RunConfig config;
    config.experiment = experiment;
    config.params_json = params.dump();
    return config;
}

std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < points; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    }
    return out;
}

std::string index_name(const std::string& stem, std::size_t i, const std::string& ext) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02zu", i);
    return stem + "_" + buf + ext;
}

// ---------------------------------------------------------------------
// experiment bodies; each returns its results object and appends the
// artifact filenames it wrote
// ---------------------------------------------------------------------

json run_double_slit(const RunConfig& config, const json& params,
                     const std::filesystem::path& outdir, std::vector<std::string>& artifacts) {
    const fields::FringeGeometry geom{params.at("c1").get<double>(), params.at("r").get<double>()};
    double lz = params.at("lz").get<double>();
    double ly = params.at("ly").get<double>();
    json calibration;
    if (!params.at("calibrate").is_null()) {
        const auto& c = params.at("calibrate");
        const auto cal = analysis::calibrate_window(geom, c.at("tau_a").get<double>(),
                                                    c.at("count_a").get<double>(),
                                                    c.at("tau_b").get<double>(),
                                                    c.at("count_b").get<double>());
        lz = 2.0 * cal.half_width;
        ly = cal.height;
        calibration = {{"half_width", cal.half_width},
                       {"atom_count", cal.atom_count},
                       {"height", cal.height}};
    }
    const auto field = fields::IntensityField::double_slit(geom, -0.5 * lz, 0.5 * lz);
    const auto screen =
        detector::generate_screen(lz, ly, params.at("density").get<double>(), config.seed);

    detector::ExposureSchedule schedule;
    for (const auto& t : params.at("exposures")) schedule.taus.push_back(t.get<double>());
    detector::ExposureOptions options;
    options.mode = detector::exposure_mode_from_name(params.at("mode").get<std::string>());
    options.literal_dtau = params.at("literal_dtau").get<double>();
    options.threads = config.threads;
    const auto snapshots = detector::run_exposure(screen, field, schedule, options);

    const int bins = params.at("bins").get<int>();
    const double scale = params.at("pgm_scale").get<double>();

    io::CsvWriter all_points({"tau", "z", "y"});
    io::CsvWriter buildup({"tau", "observed_count", "expected_count"});
    json snapshot_results = json::array();

    for (std::size_t s = 0; s < snapshots.size(); ++s) {
        const auto& snap = snapshots[s];
        for (std::size_t i = 0; i < snap.count(); ++i) {
            all_points.number_row({snap.tau, snap.z[i], snap.y[i]});
        }
        const double expected = analysis::expected_count(field, screen, snap.tau);
        buildup.raw_row({io::format_sci(snap.tau), std::to_string(snap.count()),
                         io::format_sci(expected)});

        const auto hist = analysis::histogram(snap, -0.5 * lz, 0.5 * lz, bins);
        const auto centers = hist.centers();
        const auto norm = hist.normalized();
        const auto theory_tau = analysis::theoretical_curve(field, snap.tau, centers);
        const auto theory_born = analysis::theoretical_curve(field, 0.0, centers);
        io::CsvWriter hist_csv({"bin_center", "count", "normalized", "theory_tau", "theory_born"});
        for (std::size_t k = 0; k < norm.size(); ++k) {
            hist_csv.raw_row({io::format_sci(centers[k]), std::to_string(hist.counts[k]),
                              io::format_sci(norm[k]), io::format_sci(theory_tau[k]),
                              io::format_sci(theory_born[k])});
        }
        const auto hist_name = index_name("hist", s, ".csv");
        hist_csv.write(outdir / hist_name);
        artifacts.push_back(hist_name);

        const auto pgm_name = index_name("snapshot", s, ".pgm");
        io::write_file(outdir / pgm_name, io::render_pgm(snap, screen.window, scale));
        artifacts.push_back(pgm_name);

        json entry = {{"tau", snap.tau}, {"count", snap.count()}, {"expected_count", expected}};
        if (snap.count() > 0) {
            const auto fit = analysis::goodness_of_fit(hist, theory_tau);
            entry["fit_vs_tau_curve"] = {{"rmse", fit.rmse},
                                         {"chi_square", fit.chi_square},
                                         {"dof", fit.dof}};
        }
        snapshot_results.push_back(entry);
    }
    all_points.write(outdir / "snapshots.csv");
    artifacts.push_back("snapshots.csv");
    buildup.write(outdir / "buildup.csv");
    artifacts.push_back("buildup.csv");

    json results = {{"atoms", screen.size()}, {"snapshots", snapshot_results}};
    if (!calibration.is_null()) results["calibrated_window"] = calibration;
    return results;
}

json run_born_deviation(const RunConfig& config, const json& params,
                        const std::filesystem::path& outdir, std::vector<std::string>& artifacts) {
    const fields::FringeGeometry geom{params.at("c1").get<double>(), params.at("r").get<double>()};
    const double lz = params.at("lz").get<double>();
    const double ly = params.at("ly").get<double>();
    const double density = params.at("density").get<double>();
    const double tau = params.at("tau").get<double>();
    const int realizations = params.at("realizations").get<int>();
    const int bins = params.at("bins").get<int>();
    const auto field = fields::IntensityField::double_slit(geom, -0.5 * lz, 0.5 * lz);

    // realizations fan out across threads; each one runs single-threaded
    // and deposits into its own slot, so the result is order-independent
    detector::ExposureOptions options;
    options.mode = detector::exposure_mode_from_name(params.at("mode").get<std::string>());
    options.literal_dtau = params.at("literal_dtau").get<double>();
    options.threads = 1;

    std::vector<analysis::Histogram> hists(static_cast<std::size_t>(realizations));
    std::vector<std::size_t> realization_counts(static_cast<std::size_t>(realizations));
    auto realize = [&](int r) {
        const auto screen = detector::generate_screen(
            lz, ly, density, rng::derive_seed(config.seed, static_cast<std::uint64_t>(r)));
        const auto snaps = detector::run_exposure(screen, field, {{tau}}, options);
        hists[static_cast<std::size_t>(r)] =
            analysis::histogram(snaps.front(), -0.5 * lz, 0.5 * lz, bins);
        realization_counts[static_cast<std::size_t>(r)] = snaps.front().count();
    };
    if (config.threads > 1) {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        const int workers = std::min(config.threads, realizations);
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (int r = next.fetch_add(1); r < realizations; r = next.fetch_add(1)) {
                    realize(r);
                }
            });
        }
        for (auto& th : pool) th.join();
    } else {
        for (int r = 0; r < realizations; ++r) realize(r);
    }
    json counts = json::array();
    for (const auto c : realization_counts) counts.push_back(c);

    analysis::Histogram pooled = hists.front();
    for (std::size_t r = 1; r < hists.size(); ++r) {
        for (std::size_t k = 0; k < pooled.counts.size(); ++k) {
            pooled.counts[k] += hists[r].counts[k];
        }
        pooled.dropped += hists[r].dropped;
    }
    const auto averaged = analysis::average_normalized(hists);

    const auto centers = pooled.centers();
    const auto theory_tau = analysis::theoretical_curve(field, tau, centers);
    const auto theory_born = analysis::theoretical_curve(field, 0.0, centers);

    const auto fit_born = analysis::goodness_of_fit(pooled, theory_born);
    const double rmse_vs_tau = analysis::rmse(averaged, theory_tau);
    const double rmse_vs_born = analysis::rmse(averaged, theory_born);
    double max_gap = 0.0;
    for (std::size_t k = 0; k < centers.size(); ++k) {
        max_gap = std::max(max_gap, std::abs(theory_tau[k] - theory_born[k]));
    }

    io::CsvWriter csv({"bin_center", "count", "normalized", "theory_tau", "theory_born"});
    for (std::size_t k = 0; k < averaged.size(); ++k) {
        csv.raw_row({io::format_sci(centers[k]), std::to_string(pooled.counts[k]),
                     io::format_sci(averaged[k]), io::format_sci(theory_tau[k]),
                     io::format_sci(theory_born[k])});
    }
    csv.write(outdir / "histogram.csv");
    artifacts.push_back("histogram.csv");

    return {{"realization_counts", counts},
            {"chi_square_vs_born", fit_born.chi_square},
            {"dof", fit_born.dof},
            {"chi_square_per_dof", fit_born.chi_square / fit_born.dof},
            {"rmse_vs_tau_curve", rmse_vs_tau},
            {"rmse_vs_born_curve", rmse_vs_born},
            {"max_theoretical_gap", max_gap}};
}

json run_matterwave(const json& params, const std::filesystem::path& outdir,
                    std::vector<std::string>& artifacts) {
    const auto& kc = PhysicalConstants::codata2014();
    const double lo = params.at("ck_min").get<double>();
    const double hi = params.at("ck_max").get<double>();
    const int points = params.at("points").get<int>();
    const bool log_scale = params.at("log_scale").get<bool>();
    const double u2 = params.at("amplitude_sq").get<double>();
    const std::complex<double> amplitude = std::sqrt(u2);

    std::vector<double> grid = log_scale
        ? linspace(std::log(lo), std::log(hi), points)
        : linspace(lo, hi, points);
    if (log_scale) {
        for (auto& g : grid) g = std::exp(g);
    }

    io::CsvWriter csv({"ck_over_omega_e", "omega_over_omega_e", "rho_over_e", "W_over_hbar_omega_e"});
    double max_residual = 0.0;
    for (const double ck : grid) {
        const Vec3 k{0.0, 0.0, ck * kc.omega_e / kc.c};
        const auto state = matterwave::make_plane_wave(amplitude, k, kc.omega_e, kc);
        const auto d = matterwave::plane_wave_densities(state, kc);
        csv.number_row({ck, state.omega / kc.omega_e, d.rho / kc.e_charge,
                        d.energy / (kc.hbar * kc.omega_e)});
        const auto p = matterwave::portion(state, 1.0, kc);
        max_residual = std::max(max_residual, matterwave::mass_shell_residual(p, kc));
    }
    csv.write(outdir / "matterwave.csv");
    artifacts.push_back("matterwave.csv");
    return {{"points", points}, {"max_mass_shell_residual", max_residual}};
}

// Spin density via literal 2x2 Pauli-matrix products; deliberately a
// different route than spinor::pointwise_densities so the CSV residuals
// compare two computations.
Vec3 pauli_bilinear(const spinor::Spinor2& chi, double hbar) {
    using C = std::complex<double>;
    const C zero(0.0, 0.0), one(1.0, 0.0), i_unit(0.0, 1.0);
    const C sx[2][2] = {{zero, one}, {one, zero}};
    const C sy[2][2] = {{zero, -i_unit}, {i_unit, zero}};
    const C sz[2][2] = {{one, zero}, {zero, -one}};
    const C v[2] = {chi.up, chi.down};
    auto expect = [&](const C m[2][2]) {
        C acc = zero;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) acc += std::conj(v[a]) * m[a][b] * v[b];
        }
        return acc.real();
    };
    return 0.5 * hbar * Vec3{expect(sx), expect(sy), expect(sz)};
}

json run_spin_check(const RunConfig& config, const json& params,
                    const std::filesystem::path& outdir, std::vector<std::string>& artifacts) {
    const auto& kc = PhysicalConstants::codata2014();
    const int samples = params.at("samples").get<int>();

    io::CsvWriter csv({"index", "s_x", "s_y", "s_z", "s_len_residual", "gyro_residual"});
    double max_len = 0.0, max_gyro = 0.0;
    const double gamma_e = -kc.e_charge / (kc.m_e * kc.c);
    for (int i = 0; i < samples; ++i) {
        rng::CounterStream stream(config.seed, static_cast<std::uint64_t>(i));
        auto gauss = [&](std::uint64_t d) {
            const double u1 = stream.uniform(2 * d);
            const double u2 = stream.uniform(2 * d + 1);
            return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        };
        const spinor::Spinor2 chi{{gauss(0), gauss(1)}, {gauss(2), gauss(3)}};
        const auto d = spinor::pointwise_densities(chi, kc);
        const double len_residual =
            std::abs(norm(d.spin_direction) - 0.5 * kc.hbar) / kc.hbar;
        const Vec3 gyro_gap = d.magnetization - gamma_e * pauli_bilinear(chi, kc.hbar);
        const double gyro_residual = norm(gyro_gap) / norm(d.magnetization);
        csv.raw_row({std::to_string(i), io::format_sci(d.spin_density.x),
                     io::format_sci(d.spin_density.y), io::format_sci(d.spin_density.z),
                     io::format_sci(len_residual), io::format_sci(gyro_residual)});
        max_len = std::max(max_len, len_residual);
        max_gyro = std::max(max_gyro, gyro_residual);
    }
    csv.write(outdir / "spin_invariants.csv");
    artifacts.push_back("spin_invariants.csv");

    json results = {{"samples", samples},
                    {"max_s_len_residual", max_len},
                    {"max_gyro_residual", max_gyro}};

    const auto grid_csv = params.at("grid_csv").get<std::string>();
    if (!grid_csv.empty()) {
        const auto& sp = params.at("grid_spacing");
        const auto grid = io::load_spinor_grid_csv(
            grid_csv,
            {sp[0].get<double>(), sp[1].get<double>(), sp[2].get<double>()},
            params.at("grid_periodic").get<bool>());
        const auto currents = spinor::current_on_grid(grid, kc);
        io::write_file(outdir / "current_total.csv", io::current_field_csv(grid, currents.total));
        io::write_file(outdir / "current_convective.csv",
                       io::current_field_csv(grid, currents.convective));
        io::write_file(outdir / "current_spin.csv", io::current_field_csv(grid, currents.spin));
        artifacts.insert(artifacts.end(),
                         {"current_total.csv", "current_convective.csv", "current_spin.csv"});
        results["grid_shape"] = json::array({grid.shape[0], grid.shape[1], grid.shape[2]});
    }
    return results;
}

json run_compton(const json& params, const std::filesystem::path& outdir,
                 std::vector<std::string>& artifacts) {
    const auto& kc = PhysicalConstants::codata2014();
    const double ratio = params.at("photon_energy_ratio").get<double>();
    const double omega0 = ratio * kc.m_e * kc.c * kc.c / kc.hbar;
    const auto& p0j = params.at("p0_over_mec");
    const Vec3 p0 = kc.m_e * kc.c *
                    Vec3{p0j[0].get<double>(), p0j[1].get<double>(), p0j[2].get<double>()};
    const int points = params.at("theta_points").get<int>();

    io::CsvWriter csv({"theta_rad", "omega_over_omega0", "delta_lambda_m", "energy_residual"});
    int skipped = 0;
    double max_energy = 0.0, max_momentum = 0.0;
    for (const double theta : linspace(0.0, std::numbers::pi, points)) {
        compton::ComptonInput in;
        in.omega0 = omega0;
        in.k0_dir = {0.0, 0.0, 1.0};
        in.p0 = p0;
        in.n_dir = {std::sin(theta), 0.0, std::cos(theta)};
        try {
            const auto result = compton::solve(in, kc);
            const double dlam =
                2.0 * std::numbers::pi * kc.c * (1.0 / result.omega - 1.0 / omega0);
            csv.number_row({theta, result.omega / omega0, dlam, result.energy_residual});
            max_energy = std::max(max_energy, result.energy_residual);
            max_momentum = std::max(max_momentum, result.momentum_residual);
        } catch (const kinematics_error&) {
            ++skipped;
        }
    }
    csv.write(outdir / "compton.csv");
    artifacts.push_back("compton.csv");
    return {{"points", points},
            {"skipped_invalid", skipped},
            {"max_energy_residual", max_energy},
            {"max_momentum_residual", max_momentum}};
}

json run_packet(const json& params, const std::filesystem::path& outdir,
                std::vector<std::string>& artifacts) {
    const auto shape = params.at("shape").get<std::string>();
    const auto axis = params.at("axis").get<std::string>() == "time" ? packet::Axis::time
                                                                     : packet::Axis::space;
    const packet::Grid grid{static_cast<std::size_t>(params.at("n").get<int>()),
                            params.at("extent").get<double>()};
    const double k_center = params.at("k_center").get<double>();

    double param = 0.0;
    packet::SampledPacket p;
    if (shape == "gaussian") {
        param = params.at("sigma").get<double>();
        p = packet::build_gaussian_packet(param, k_center, grid, axis);
    } else {
        param = params.at("width").get<double>();
        p = packet::build_hann_packet(param, k_center, grid, axis);
    }
    const auto widths = axis == packet::Axis::time ? packet::time_frequency_widths(p)
                                                   : packet::rms_widths(p);

    io::CsvWriter csv({"param", "delta_x", "delta_k", "product", "eps_grid"});
    csv.number_row({param, widths.delta_x, widths.delta_k, widths.product, widths.eps_grid});
    csv.write(outdir / "packet.csv");
    artifacts.push_back("packet.csv");
    return {{"shape", shape},
            {"delta_x", widths.delta_x},
            {"delta_k", widths.delta_k},
            {"product", widths.product},
            {"eps_grid", widths.eps_grid},
            {"parseval_residual", widths.parseval_residual},
            {"spectral_centroid", widths.spectral_centroid}};
}

json run_xsec(const json& params, const std::filesystem::path& outdir,
              std::vector<std::string>& artifacts) {
    const double n0 = params.at("n0").get<double>();
    io::CsvWriter csv({"v_squared", "sigma2", "rate_b"});
    for (const double v2 : linspace(params.at("v2_min").get<double>(),
                                    params.at("v2_max").get<double>(),
                                    params.at("points").get<int>())) {
        const double v = std::sqrt(v2);
        const double sigma = rates::hydrogen_excitation_cross_section(v);
        csv.number_row({v2, sigma, rates::rate_coefficient(sigma, v, n0)});
    }
    csv.write(outdir / "xsec.csv");
    artifacts.push_back("xsec.csv");
    return {{"points", params.at("points").get<int>()}};
}

} // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "double_slit_buildup", "born_deviation", "matterwave_sweep", "spin_check",
        "compton_sweep",       "packet_widths",  "xsec"};
    return names;
}

RunConfig default_config(const std::string& experiment) {
    return build_config(experiment, json::object());
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config: " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("config parse error in " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw config_error("config must be a JSON object");
    if (!doc.contains("experiment") || !doc.at("experiment").is_string()) {
        throw config_error("config requires a string 'experiment' field");
    }
    const auto experiment = doc.at("experiment").get<std::string>();

    std::uint64_t seed = 1;
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned()) bad_field("seed", "must be a nonnegative integer");
        seed = doc.at("seed").get<std::uint64_t>();
    }
    int threads = 1;
    if (doc.contains("threads")) {
        if (!doc.at("threads").is_number_integer() || doc.at("threads").get<int>() < 1) {
            bad_field("threads", "must be an integer >= 1");
        }
        threads = doc.at("threads").get<int>();
    }
    std::string output_dir;
    if (doc.contains("output_dir")) {
        if (!doc.at("output_dir").is_string()) bad_field("output_dir", "must be a string");
        output_dir = doc.at("output_dir").get<std::string>();
    }

    json user = json::object();
    for (const auto& [key, value] : doc.items()) {
        if (key == "experiment" || key == "seed" || key == "threads" || key == "output_dir") {
            continue;
        }
        user[key] = value;
    }
    RunConfig config = build_config(experiment, user);
    config.seed = seed;
    config.threads = threads;
    if (!output_dir.empty()) {
        config.output_dir = output_dir;
        config.output_dir_source = "config";
    }
    return config;
}

void apply_overrides(RunConfig& config, std::optional<std::uint64_t> seed,
                     std::optional<std::string> out, std::optional<int> threads) {
    if (seed) config.seed = *seed;
    if (out) {
        config.output_dir = *out;
        config.output_dir_source = "cli";
    }
    if (threads) {
        if (*threads < 1) throw config_error("--threads must be >= 1");
        config.threads = *threads;
    }
}

RunResult run(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();

    RunConfig resolved = config;
    const char* env_dir = std::getenv(kOutputDirEnv);
    if (resolved.output_dir.empty()) {
        if (env_dir != nullptr && *env_dir != '\0') {
            resolved.output_dir = env_dir;
            resolved.output_dir_source = "env";
        } else {
            resolved.output_dir = "waveatom_out";
            resolved.output_dir_source = "default";
        }
    }
    const std::filesystem::path outdir =
        std::filesystem::path(resolved.output_dir) / resolved.experiment;
    std::filesystem::create_directories(outdir);

    const json params = json::parse(resolved.params_json);
    std::vector<std::string> artifacts;
    json results;
    if (resolved.experiment == "double_slit_buildup") {
        results = run_double_slit(resolved, params, outdir, artifacts);
    } else if (resolved.experiment == "born_deviation") {
        results = run_born_deviation(resolved, params, outdir, artifacts);
    } else if (resolved.experiment == "matterwave_sweep") {
        results = run_matterwave(params, outdir, artifacts);
    } else if (resolved.experiment == "spin_check") {
        results = run_spin_check(resolved, params, outdir, artifacts);
    } else if (resolved.experiment == "compton_sweep") {
        results = run_compton(params, outdir, artifacts);
    } else if (resolved.experiment == "packet_widths") {
        results = run_packet(params, outdir, artifacts);
    } else if (resolved.experiment == "xsec") {
        results = run_xsec(params, outdir, artifacts);
    } else {
        throw config_error("unknown experiment '" + resolved.experiment + "'");
    }

    const auto& kc = PhysicalConstants::codata2014();
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    json report = {
        {"experiment", resolved.experiment},
        {"seed", resolved.seed},
        {"threads", resolved.threads},
        {"config", params},
        {"output_dir", resolved.output_dir},
        {"output_dir_source", resolved.output_dir_source},
        {"env_WAVEATOM_OUT_DIR", env_dir != nullptr ? json(env_dir) : json(nullptr)},
        {"constants",
         {{"hbar", kc.hbar},
          {"c", kc.c},
          {"e_charge", kc.e_charge},
          {"omega_e", kc.omega_e},
          {"m_e", kc.m_e},
          {"version", constants_version()}}},
        {"results", results},
        {"artifacts", artifacts},
        {"wall_time_s", elapsed.count()},
    };
    io::write_file(outdir / "report.json", report.dump(2) + "\n");
    artifacts.push_back("report.json");

    RunResult result;
    result.output_dir = outdir;
    result.artifacts = artifacts;
    return result;
}

} // namespace waveatom::experiments
