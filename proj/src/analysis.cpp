#include "waveatom/analysis.hpp"

#include "waveatom/errors.hpp"
#include "waveatom/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace waveatom::analysis {

std::uint64_t Histogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<double> Histogram::centers() const {
    std::vector<double> c(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) c[k] = 0.5 * (edges[k] + edges[k + 1]);
    return c;
}

std::vector<double> Histogram::normalized() const {
    std::vector<double> out(counts.size(), 0.0);
    const std::uint64_t peak = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    if (peak == 0) return out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        out[k] = static_cast<double>(counts[k]) / static_cast<double>(peak);
    }
    return out;
}

Histogram histogram(const detector::Snapshot& snapshot, double z_min, double z_max, int bins) {
    if (bins < 1) throw config_error("histogram: bins must be >= 1");
    if (!(z_min < z_max)) throw config_error("histogram: z_min must be < z_max");
    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    const double width = (z_max - z_min) / bins;
    for (std::size_t k = 0; k < h.edges.size(); ++k) h.edges[k] = z_min + width * static_cast<double>(k);
    h.edges.back() = z_max;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (const double z : snapshot.z) {
        if (!(z >= z_min && z <= z_max)) { // non-finite z also drops
            ++h.dropped;
            continue;
        }
        auto k = static_cast<std::size_t>((z - z_min) / width);
        if (k >= h.counts.size()) k = h.counts.size() - 1; // last bin closed
        ++h.counts[k];
    }
    return h;
}

std::vector<double> theoretical_curve(const fields::IntensityField& field, double tau,
                                      const std::vector<double>& z_grid) {
    std::vector<double> out(z_grid.size());
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        const double rel = field(z_grid[i]);
        out[i] = tau == 0.0 ? rel : rates::detection_ratio(rel, tau);
    }
    return out;
}

double rmse(const std::vector<double>& normalized_values, const std::vector<double>& curve) {
    if (curve.size() != normalized_values.size()) {
        throw fit_error("rmse: curve length must equal value count");
    }
    const double peak = *std::max_element(curve.begin(), curve.end());
    if (!(peak > 0.0)) throw fit_error("rmse: reference curve is nonpositive");
    double sq = 0.0;
    for (std::size_t k = 0; k < normalized_values.size(); ++k) {
        const double d = normalized_values[k] - curve[k] / peak;
        sq += d * d;
    }
    return std::sqrt(sq / static_cast<double>(normalized_values.size()));
}

FitStats goodness_of_fit(const Histogram& hist, const std::vector<double>& curve) {
    if (curve.size() != hist.counts.size()) {
        throw fit_error("goodness_of_fit: curve length must equal bin count");
    }
    const double total = static_cast<double>(hist.total());
    if (total == 0.0) throw fit_error("goodness_of_fit: histogram has no counts");
    for (const double v : curve) {
        if (!(v >= 0.0)) throw fit_error("goodness_of_fit: curve values must be >= 0");
    }
    const double curve_sum = std::accumulate(curve.begin(), curve.end(), 0.0);

    FitStats stats;
    stats.rmse = rmse(hist.normalized(), curve);

    // Pearson chi-square with expected counts scaled to the observed
    // total; low-expectation bins are pooled left-to-right until each
    // group reaches 5, a trailing short group merges into the previous.
    std::vector<double> obs_g, exp_g;
    double acc_obs = 0.0, acc_exp = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        acc_obs += static_cast<double>(hist.counts[k]);
        acc_exp += total * curve[k] / curve_sum;
        if (acc_exp >= 5.0) {
            obs_g.push_back(acc_obs);
            exp_g.push_back(acc_exp);
            acc_obs = acc_exp = 0.0;
        }
    }
    if ((acc_exp > 0.0 || acc_obs > 0.0) && !exp_g.empty()) {
        obs_g.back() += acc_obs;
        exp_g.back() += acc_exp;
    }
    if (exp_g.size() < 2) throw fit_error("goodness_of_fit: fewer than two usable bins");
    for (std::size_t g = 0; g < exp_g.size(); ++g) {
        const double d = obs_g[g] - exp_g[g];
        stats.chi_square += d * d / exp_g[g];
    }
    stats.dof = static_cast<int>(exp_g.size()) - 1;
    return stats;
}

std::vector<double> average_normalized(const std::vector<Histogram>& histograms) {
    if (histograms.empty()) throw fit_error("average_normalized: no histograms");
    std::vector<double> mean(histograms.front().counts.size(), 0.0);
    for (const auto& h : histograms) {
        if (h.counts.size() != mean.size()) {
            throw fit_error("average_normalized: histograms have differing bin counts");
        }
        const auto n = h.normalized();
        for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += n[k];
    }
    for (auto& v : mean) v /= static_cast<double>(histograms.size());
    const double peak = *std::max_element(mean.begin(), mean.end());
    if (peak > 0.0) {
        for (auto& v : mean) v /= peak;
    }
    return mean;
}

double expected_count(const fields::IntensityField& field, const detector::AtomScreen& screen,
                      double tau) {
    if (!(tau >= 0.0)) throw domain_error("expected_count: tau must be >= 0");
    double sum = 0.0;
    for (const double z : screen.z) sum += -std::expm1(-field(z) * tau);
    return sum;
}

double expected_fraction(const fields::FringeGeometry& geom, double tau, double half_width) {
    if (!(half_width > 0.0)) throw domain_error("expected_fraction: half_width must be > 0");
    if (!(tau >= 0.0)) throw domain_error("expected_fraction: tau must be >= 0");
    // The integrand is even; integrate [0, Z] with composite Simpson.
    constexpr int kIntervals = 20000;
    const double h = half_width / kIntervals;
    auto f = [&](double z) { return -std::expm1(-fields::double_slit_intensity(z, geom) * tau); };
    double sum = f(0.0) + f(half_width);
    for (int i = 1; i < kIntervals; ++i) {
        sum += f(h * i) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0 / half_width;
}

WindowCalibration calibrate_window(const fields::FringeGeometry& geom,
                                   double tau_a, double count_a,
                                   double tau_b, double count_b) {
    fields::validate(geom);
    if (!(tau_a > 0.0 && tau_b > tau_a && count_a > 0.0 && count_b > count_a)) {
        throw domain_error("calibrate_window: need 0 < tau_a < tau_b and 0 < count_a < count_b");
    }
    const double target = count_b / count_a;
    auto ratio = [&](double z) {
        return expected_fraction(geom, tau_b, z) / expected_fraction(geom, tau_a, z);
    };
    double lo = 10.0, hi = 5000.0;
    if (!(ratio(lo) < target && ratio(hi) > target)) {
        throw domain_error("calibrate_window: count ratio not bracketed by half-widths [10, 5000]");
    }
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ratio(mid) < target ? lo : hi) = mid;
    }
    WindowCalibration cal;
    cal.half_width = 0.5 * (lo + hi);
    cal.atom_count = count_a / expected_fraction(geom, tau_a, cal.half_width);
    cal.height = cal.atom_count / (2.0 * cal.half_width);
    return cal;
}

} // namespace waveatom::analysis
