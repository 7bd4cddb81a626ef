#pragma once

#include "waveatom/detector.hpp"
#include "waveatom/fields.hpp"

#include <cstdint>
#include <vector>

namespace waveatom::analysis {

struct Histogram {
    std::vector<double> edges;        ///< bins+1 increasing edges
    std::vector<std::uint64_t> counts;
    std::uint64_t dropped = 0;        ///< points outside [first, last] edge

    std::uint64_t total() const;
    std::vector<double> centers() const;
    /// Counts scaled so the maximum bin equals 1 (all zeros stay zero).
    std::vector<double> normalized() const;
};

/// Bins snapshot positions by z (y marginalized). Half-open bins
/// [e_k, e_{k+1}), last bin closed.
Histogram histogram(const detector::Snapshot& snapshot, double z_min, double z_max, int bins);

/// Detection-ratio curve at the grid points; tau = 0 gives the field's
/// relative intensity itself (the Born limit).
std::vector<double> theoretical_curve(const fields::IntensityField& field, double tau,
                                      const std::vector<double>& z_grid);

struct FitStats {
    double rmse = 0.0;
    double chi_square = 0.0;
    int dof = 0;
};

/// Root-mean-square gap between normalized values and the curve scaled
/// to peak 1.
double rmse(const std::vector<double>& normalized_values, const std::vector<double>& curve);

/// RMSE over normalized values plus Pearson chi-square. Expected counts
/// come from scaling the curve to the histogram total; bins with
/// expected < 5 are merged into their neighbors; dof = used bins - 1.
FitStats goodness_of_fit(const Histogram& hist, const std::vector<double>& curve);

/// Bin-wise mean of normalized histograms, renormalized to max 1.
std::vector<double> average_normalized(const std::vector<Histogram>& histograms);

/// Semianalytic expectation sum_i (1 - exp(-relI(z_i) tau)) over the
/// screen's atoms.
double expected_count(const fields::IntensityField& field, const detector::AtomScreen& screen,
                      double tau);

/// Mean excitation probability (1/(2Z)) * integral over [-Z, Z] of
/// 1 - exp(-relI(z) tau), by composite Simpson quadrature.
double expected_fraction(const fields::FringeGeometry& geom, double tau, double half_width);

/// Window half-width and atom count fitted so the continuum expectation
/// reproduces two reference counts (two equations, two unknowns; the
/// half-width is found by bisection on the count ratio).
struct WindowCalibration {
    double half_width = 0.0;
    double atom_count = 0.0;
    double height = 0.0; ///< ly giving atom_count at unit density
};

WindowCalibration calibrate_window(const fields::FringeGeometry& geom,
                                   double tau_a, double count_a,
                                   double tau_b, double count_b);

} // namespace waveatom::analysis
