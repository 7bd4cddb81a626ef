#include "waveatom/detector.hpp"

#include "waveatom/errors.hpp"
#include "waveatom/rates.hpp"
#include "waveatom/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <thread>

namespace waveatom::detector {

namespace {

// Draw indices within an atom's stream. Positions and excitation draws
// share the stream so a single (seed, atom, draw) triple addresses every
// random number in a run.
constexpr std::uint64_t kDrawZ = 0;
constexpr std::uint64_t kDrawY = 1;
constexpr std::uint64_t kDrawExcite = 2;
constexpr std::uint64_t kDrawLiteralBase = 3;

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads <= 1 || n < 2048) {
        body(0, n);
        return;
    }
    const auto nthreads = static_cast<std::size_t>(threads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

AtomScreen fill_positions(double lz, double ly, std::size_t count, std::uint64_t seed) {
    AtomScreen screen;
    screen.window = {lz, ly};
    screen.seed = seed;
    screen.z.resize(count);
    screen.y.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        rng::CounterStream s(seed, i);
        screen.z[i] = (s.uniform(kDrawZ) - 0.5) * lz;
        screen.y[i] = (s.uniform(kDrawY) - 0.5) * ly;
    }
    return screen;
}

} // namespace

AtomScreen generate_screen(double lz, double ly, double density, std::uint64_t seed) {
    if (!(lz > 0.0 && ly > 0.0)) throw config_error("generate_screen: window sides must be > 0");
    if (!(density > 0.0)) throw config_error("generate_screen: density must be > 0");
    const double n = std::round(density * lz * ly);
    if (!(n >= 1.0)) throw config_error("generate_screen: window too small, zero atoms requested");
    return fill_positions(lz, ly, static_cast<std::size_t>(n), seed);
}

AtomScreen generate_screen_count(double lz, double ly, std::size_t count, std::uint64_t seed) {
    if (!(lz > 0.0 && ly > 0.0)) throw config_error("generate_screen: window sides must be > 0");
    if (count < 1) throw config_error("generate_screen: zero atoms requested");
    return fill_positions(lz, ly, count, seed);
}

std::optional<double> sample_excitation_time(double w, double u) {
    if (!(u > 0.0 && u < 1.0)) throw domain_error("sample_excitation_time: u must be in (0,1)");
    if (!(w > 0.0)) return std::nullopt; // dark-fringe atom, never excites
    return -std::log(u) / w;
}

ExposureMode exposure_mode_from_name(const std::string& name) {
    if (name == "exact_exponential") return ExposureMode::exact_exponential;
    if (name == "literal_per_step") return ExposureMode::literal_per_step;
    throw config_error("unknown exposure mode '" + name +
                       "' (expected exact_exponential or literal_per_step)");
}

std::string exposure_mode_name(ExposureMode mode) {
    return mode == ExposureMode::exact_exponential ? "exact_exponential" : "literal_per_step";
}

void validate(const ExposureSchedule& s) {
    if (s.taus.empty()) throw config_error("exposure schedule must be nonempty");
    for (std::size_t i = 0; i < s.taus.size(); ++i) {
        if (!(s.taus[i] >= 0.0)) throw config_error("exposure schedule entries must be >= 0");
        if (i > 0 && !(s.taus[i] > s.taus[i - 1])) {
            throw config_error("exposure schedule must be strictly increasing");
        }
    }
}

std::vector<double> excitation_times(const AtomScreen& screen,
                                     const fields::IntensityField& field, double tau_max,
                                     const ExposureOptions& options) {
    if (!(tau_max >= 0.0)) throw config_error("excitation_times: tau_max must be >= 0");
    const std::size_t n = screen.size();
    std::vector<double> excite_at(n, std::numeric_limits<double>::infinity());

    if (options.mode == ExposureMode::exact_exponential) {
        parallel_for(n, options.threads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const double w = field(screen.z[i]);
                if (w <= 0.0) continue;
                rng::CounterStream s(screen.seed, i);
                excite_at[i] = -std::log(s.uniform(kDrawExcite)) / w;
            }
        });
    } else {
        const double dtau = options.literal_dtau;
        if (!(dtau > 0.0)) throw config_error("literal_per_step requires dtau > 0");
        const auto steps = static_cast<std::uint64_t>(std::ceil(tau_max / dtau - 1e-12));
        parallel_for(n, options.threads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const double rel = field(screen.z[i]);
                if (rel <= 0.0) continue;
                rng::CounterStream s(screen.seed, i);
                for (std::uint64_t j = 1; j <= steps; ++j) {
                    const double tau_j = static_cast<double>(j) * dtau;
                    const double p = rates::cumulative_excitation_probability(rel, tau_j);
                    if (s.uniform(kDrawLiteralBase + j) <= p) {
                        excite_at[i] = tau_j;
                        break;
                    }
                }
            }
        });
    }
    return excite_at;
}

std::vector<Snapshot> run_exposure(const AtomScreen& screen,
                                   const fields::IntensityField& field,
                                   const ExposureSchedule& schedule,
                                   const ExposureOptions& options) {
    validate(schedule);
    const std::size_t n = screen.size();
    const auto excite_at = excitation_times(screen, field, schedule.taus.back(), options);

    std::vector<Snapshot> result;
    result.reserve(schedule.taus.size());
    for (const double tau : schedule.taus) {
        Snapshot snap;
        snap.tau = tau;
        for (std::size_t i = 0; i < n; ++i) {
            if (excite_at[i] <= tau) {
                snap.z.push_back(screen.z[i]);
                snap.y.push_back(screen.y[i]);
            }
        }
        result.push_back(std::move(snap));
    }
    return result;
}

} // namespace waveatom::detector
