#pragma once

#include <utility>
#include <vector>

namespace waveatom::rates {

/// Per-atom excitation rate w = b * intensity.
double excitation_rate(double b, double intensity);

/// Probability that an atom exposed at constant rate w stays unexcited
/// for time t: exp(-w t). The complementary P+ = 1 - P-.
double survival_probability(double w, double t);

/// Survival under a piecewise-constant rate schedule: steps are
/// (duration, rate) pairs, total exposure is the accumulated sum of
/// rate*duration.
double survival_probability(const std::vector<std::pair<double, double>>& steps);

/// P+ = 1 - exp(-relI * tau) for relI in [0,1] and nondimensional
/// exposure tau >= 0.
double cumulative_excitation_probability(double rel_intensity, double tau);

/// Detection ratio p/p(0) = (1 - exp(-relI tau)) / (1 - exp(-tau)).
/// tau -> 0 reduces to relI itself (the Born limit); a short series in
/// tau is used below 1e-6 to avoid 0/0 cancellation.
double detection_ratio(double rel_intensity, double tau);

/// Total cross-section for exciting the first excited state of hydrogen
/// by an electron wave of group speed v, Hartree atomic units:
/// (4*pi/v^2) * 0.555 * ln(v^2/0.50). Below threshold (v^2 <= 0.50) the
/// formula is unphysical and rejected.
double hydrogen_excitation_cross_section(double v);

/// Rate coefficient b = sigma * v / N0 for a detector of N0 atoms.
double rate_coefficient(double sigma, double v, double n0);

} // namespace waveatom::rates
