#include "waveatom/fields.hpp"

#include "waveatom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace waveatom::fields {

void validate(const FringeGeometry& g) {
    if (!(g.c1 > 0.0)) throw domain_error("FringeGeometry: c1 must be > 0");
    if (!(g.r >= 0.0)) throw domain_error("FringeGeometry: r must be >= 0");
}

double double_slit_intensity(double z, const FringeGeometry& g) {
    const double x = g.c1 * z;
    const double c = std::cos(g.r * x);
    double sinc2;
    if (std::abs(x) < 1e-4) {
        // (sin x / x)^2 = 1 - x^2/3 + O(x^4); the truncation is below
        // double rounding for |x| < 1e-4.
        sinc2 = 1.0 - x * x / 3.0;
    } else {
        const double s = std::sin(x) / x;
        sinc2 = s * s;
    }
    return c * c * sinc2;
}

void validate(const TabulatedProfile& t) {
    if (t.z.size() != t.rel_intensity.size()) {
        throw config_error("tabulated profile: z and rel_intensity lengths differ");
    }
    if (t.z.size() < 2) throw config_error("tabulated profile: need at least 2 samples");
    double peak = 0.0;
    for (std::size_t i = 0; i < t.z.size(); ++i) {
        if (i > 0 && !(t.z[i] > t.z[i - 1])) {
            throw config_error("tabulated profile: z must be strictly increasing (row " +
                               std::to_string(i) + ")");
        }
        const double v = t.rel_intensity[i];
        if (!(v >= 0.0 && v <= 1.0)) {
            throw config_error("tabulated profile: rel_intensity out of [0,1] (row " +
                               std::to_string(i) + ")");
        }
        peak = std::max(peak, v);
    }
    if (std::abs(peak - 1.0) > 1e-6) {
        throw config_error("tabulated profile: maximum must equal 1 within 1e-6, got " +
                           std::to_string(peak));
    }
}

double tabulated_intensity(const TabulatedProfile& t, double z) {
    if (z < t.z.front() || z > t.z.back()) {
        throw domain_error("tabulated_intensity: z outside table range");
    }
    const auto it = std::upper_bound(t.z.begin(), t.z.end(), z);
    if (it == t.z.end()) return t.rel_intensity.back();
    const auto hi = static_cast<std::size_t>(it - t.z.begin());
    if (hi == 0) return t.rel_intensity.front();
    const std::size_t lo = hi - 1;
    const double f = (z - t.z[lo]) / (t.z[hi] - t.z[lo]);
    return t.rel_intensity[lo] + f * (t.rel_intensity[hi] - t.rel_intensity[lo]);
}

IntensityField IntensityField::double_slit(const FringeGeometry& g, double z_min, double z_max) {
    validate(g);
    if (!(z_min < z_max)) throw config_error("IntensityField: z_min must be < z_max");
    if (!(z_min <= 0.0 && 0.0 <= z_max)) {
        throw config_error("IntensityField: window must contain the central peak z = 0");
    }
    IntensityField f;
    f.kind_ = Kind::double_slit;
    f.fringe_ = g;
    f.z_min_ = z_min;
    f.z_max_ = z_max;
    return f;
}

IntensityField IntensityField::uniform(double z_min, double z_max) {
    if (!(z_min < z_max)) throw config_error("IntensityField: z_min must be < z_max");
    IntensityField f;
    f.kind_ = Kind::uniform;
    f.z_min_ = z_min;
    f.z_max_ = z_max;
    return f;
}

IntensityField IntensityField::tabulated(TabulatedProfile t) {
    validate(t);
    IntensityField f;
    f.kind_ = Kind::tabulated;
    f.z_min_ = t.z.front();
    f.z_max_ = t.z.back();
    f.table_ = std::move(t);
    return f;
}

double IntensityField::operator()(double z) const {
    switch (kind_) {
    case Kind::double_slit:
        return double_slit_intensity(z, fringe_);
    case Kind::uniform:
        return 1.0;
    case Kind::tabulated:
        return tabulated_intensity(table_, z);
    }
    return 0.0;
}

std::string IntensityField::kind_name() const {
    switch (kind_) {
    case Kind::double_slit: return "double_slit";
    case Kind::uniform: return "uniform";
    case Kind::tabulated: return "tabulated";
    }
    return "?";
}

} // namespace waveatom::fields
