#include "waveatom/rates.hpp"

#include "waveatom/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace waveatom::rates {

double excitation_rate(double b, double intensity) {
    if (!(b >= 0.0)) throw domain_error("excitation_rate: b must be >= 0");
    if (!(intensity >= 0.0)) throw domain_error("excitation_rate: intensity must be >= 0");
    return b * intensity;
}

double survival_probability(double w, double t) {
    if (!(w >= 0.0)) throw domain_error("survival_probability: rate must be >= 0");
    if (!(t >= 0.0)) throw domain_error("survival_probability: time must be >= 0");
    return std::exp(-w * t);
}

double survival_probability(const std::vector<std::pair<double, double>>& steps) {
    double accumulated = 0.0;
    for (const auto& [duration, rate] : steps) {
        if (!(duration >= 0.0) || !(rate >= 0.0)) {
            throw domain_error("survival_probability: schedule entries must be >= 0");
        }
        accumulated += rate * duration;
    }
    return std::exp(-accumulated);
}

namespace {
void check_rel_intensity(double rel, const char* who) {
    if (!(rel >= 0.0 && rel <= 1.0)) {
        throw domain_error(std::string(who) + ": relative intensity must be in [0,1], got " +
                           std::to_string(rel));
    }
}
} // namespace

double cumulative_excitation_probability(double rel_intensity, double tau) {
    check_rel_intensity(rel_intensity, "cumulative_excitation_probability");
    if (!(tau >= 0.0)) throw domain_error("cumulative_excitation_probability: tau must be >= 0");
    return -std::expm1(-rel_intensity * tau);
}

double detection_ratio(double rel_intensity, double tau) {
    check_rel_intensity(rel_intensity, "detection_ratio");
    if (!(tau >= 0.0)) throw domain_error("detection_ratio: tau must be >= 0");
    const double a = rel_intensity;
    if (tau < 1e-6) {
        // (1-e^{-a t})/(1-e^{-t}) = a[1 + (1-a)t/2 + (1/12 - a/4 + a^2/6)t^2 + ...]
        return a * (1.0 + 0.5 * (1.0 - a) * tau +
                    (1.0 / 12.0 - a / 4.0 + a * a / 6.0) * tau * tau);
    }
    return std::expm1(-a * tau) / std::expm1(-tau);
}

double hydrogen_excitation_cross_section(double v) {
    const double v2 = v * v;
    if (!(v2 > 0.50)) {
        throw domain_error("hydrogen_excitation_cross_section: below threshold, need v^2 > 0.50, got v^2 = " +
                           std::to_string(v2));
    }
    return 4.0 * std::numbers::pi / v2 * 0.555 * std::log(v2 / 0.50);
}

double rate_coefficient(double sigma, double v, double n0) {
    if (!(sigma >= 0.0)) throw domain_error("rate_coefficient: sigma must be >= 0");
    if (!(v > 0.0)) throw domain_error("rate_coefficient: v must be > 0");
    if (!(n0 >= 1.0)) throw domain_error("rate_coefficient: N0 must be >= 1");
    return sigma * v / n0;
}

} // namespace waveatom::rates
