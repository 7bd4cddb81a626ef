#pragma once

#include "waveatom/fields.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace waveatom::detector {

/// Rectangular screen window centered on the origin.
struct Window {
    double lz = 0.0;
    double ly = 0.0;
};

/// Finite random ensemble of detector atoms. Positions are i.i.d.
/// uniform over the window; the length unit is the average inter-atom
/// spacing, so density defaults to 1.
struct AtomScreen {
    std::vector<double> z;
    std::vector<double> y;
    Window window;
    std::uint64_t seed = 0;

    std::size_t size() const { return z.size(); }
};

/// Screen with count = round(density * lz * ly) atoms.
AtomScreen generate_screen(double lz, double ly, double density, std::uint64_t seed);

/// Screen with an explicit atom count (>= 1).
AtomScreen generate_screen_count(double lz, double ly, std::size_t count, std::uint64_t seed);

/// Inverse-CDF draw from the exponential waiting-time law: -ln(u)/w.
/// A nonpositive rate means the atom never excites (empty optional).
std::optional<double> sample_excitation_time(double w, double u);

enum class ExposureMode {
    /// One exponential waiting time per atom; samples the survival law
    /// exactly. This is the default.
    exact_exponential,
    /// The stepwise procedure: at each step of size dtau a fresh uniform
    /// is compared against the cumulative P+(tau). Over-counts relative
    /// to the exponential law; kept for side-by-side comparison.
    literal_per_step,
};

ExposureMode exposure_mode_from_name(const std::string& name);
std::string exposure_mode_name(ExposureMode mode);

/// Strictly increasing snapshot times (nondimensional tau, all >= 0).
struct ExposureSchedule {
    std::vector<double> taus;
};

void validate(const ExposureSchedule& s);

/// Excited-atom positions at one snapshot time. Excitation is absorbing,
/// so counts are nondecreasing across a schedule.
struct Snapshot {
    double tau = 0.0;
    std::vector<double> z;
    std::vector<double> y;

    std::size_t count() const { return z.size(); }
};

struct ExposureOptions {
    ExposureMode mode = ExposureMode::exact_exponential;
    double literal_dtau = 0.01; ///< step size for literal_per_step
    int threads = 1;
};

/// Per-atom excitation time (infinity = never excites). Exposure is
/// absorbing: the atoms of any snapshot at time tau are exactly those
/// with excitation_times[i] <= tau.
std::vector<double> excitation_times(const AtomScreen& screen,
                                     const fields::IntensityField& field, double tau_max,
                                     const ExposureOptions& options = {});

/// Runs the exposure and returns one snapshot per schedule entry.
/// Deterministic for a given (screen.seed, mode), independent of the
/// thread count.
std::vector<Snapshot> run_exposure(const AtomScreen& screen,
                                   const fields::IntensityField& field,
                                   const ExposureSchedule& schedule,
                                   const ExposureOptions& options = {});

} // namespace waveatom::detector
