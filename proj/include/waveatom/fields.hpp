#pragma once

#include <string>
#include <vector>

namespace waveatom::fields {

/// Two-slit fringe model parameters. Only the composite combinations
/// c1 (slit-width scale per unit screen coordinate) and r (slit
/// separation over slit width) enter the intensity profile.
struct FringeGeometry {
    double c1 = 0.03;
    double r = 5.0;
};

void validate(const FringeGeometry& g);

/// Normalized two-slit intensity cos^2(r*x) * (sin x / x)^2 with
/// x = c1*z. Total on the real line; the removable singularity at
/// x = 0 is handled by a short series.
double double_slit_intensity(double z, const FringeGeometry& g);

/// Tabulated profile: strictly increasing z, values in [0, 1], and a
/// maximum within 1e-6 of 1 (the profile is normalized by contract).
struct TabulatedProfile {
    std::vector<double> z;
    std::vector<double> rel_intensity;
};

void validate(const TabulatedProfile& t);

/// Linear interpolation between bracketing samples; z outside the table
/// range is a domain error.
double tabulated_intensity(const TabulatedProfile& t, double z);

/// Normalized intensity I/I0 over a screen-coordinate window.
class IntensityField {
public:
    enum class Kind { double_slit, uniform, tabulated };

    static IntensityField double_slit(const FringeGeometry& g, double z_min, double z_max);
    static IntensityField uniform(double z_min, double z_max);
    static IntensityField tabulated(TabulatedProfile t);

    /// Relative intensity at z, in [0, 1].
    double operator()(double z) const;

    Kind kind() const { return kind_; }
    double z_min() const { return z_min_; }
    double z_max() const { return z_max_; }
    const FringeGeometry& fringe() const { return fringe_; }
    const TabulatedProfile& table() const { return table_; }
    std::string kind_name() const;

private:
    IntensityField() = default;
    Kind kind_ = Kind::uniform;
    double z_min_ = 0.0;
    double z_max_ = 1.0;
    FringeGeometry fringe_;
    TabulatedProfile table_;
};

} // namespace waveatom::fields
