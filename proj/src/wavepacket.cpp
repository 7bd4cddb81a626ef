#include "waveatom/wavepacket.hpp"

#include "waveatom/errors.hpp"
#include "waveatom/fft.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <utility>

namespace waveatom::packet {

namespace {

double grid_x(std::size_t j, std::size_t n, double spacing) {
    return (static_cast<double>(j) - 0.5 * static_cast<double>(n)) * spacing;
}

void check_grid_contract(const std::vector<std::complex<double>>& samples, double spacing) {
    if (samples.size() < 16 || !fft::is_power_of_two(samples.size())) {
        throw config_error("packet: sample count must be a power of two >= 16");
    }
    if (!(spacing > 0.0)) throw config_error("packet: spacing must be > 0");
    double peak = 0.0;
    double weight = 0.0;
    for (const auto& v : samples) {
        peak = std::max(peak, std::abs(v));
        weight += std::norm(v);
    }
    if (!(weight * spacing > 0.0)) throw config_error("packet: total weight is zero");
    const double boundary = std::max(std::abs(samples.front()), std::abs(samples.back()));
    if (boundary > 1e-8 * peak) {
        throw config_error("packet: envelope not negligible at the grid boundary (ratio " +
                           std::to_string(boundary / peak) + ", need <= 1e-8)");
    }
}

struct CoreWidths {
    double delta_x, delta_k, parseval_residual, spectral_centroid;
};

CoreWidths core_widths(const std::vector<std::complex<double>>& samples, double spacing,
                       bool nyquist_gate) {
    const std::size_t n = samples.size();

    double weight = 0.0, mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w = std::norm(samples[j]);
        weight += w;
        mean += w * grid_x(j, n, spacing);
    }
    mean /= weight;
    double var = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = grid_x(j, n, spacing) - mean;
        var += std::norm(samples[j]) * d * d;
    }
    var /= weight;

    auto spectrum = samples;
    fft::transform(spectrum);
    // Continuum normalization Phi(k) ~ spacing * DFT; the magnitude is
    // what matters for the moments, the x_0 phase drops out.
    const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * spacing);

    double sweight = 0.0, smean = 0.0, edge_weight = 0.0;
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::size_t m = 0; m < n; ++m) {
        const auto signed_j =
            static_cast<std::ptrdiff_t>(m) < half ? static_cast<std::ptrdiff_t>(m)
                                                  : static_cast<std::ptrdiff_t>(m) - static_cast<std::ptrdiff_t>(n);
        const double w = std::norm(spectrum[m]);
        sweight += w;
        smean += w * static_cast<double>(signed_j);
        if (std::abs(signed_j) >= half - 3) edge_weight += w;
    }
    if (nyquist_gate && edge_weight > 1e-6 * sweight) {
        throw resolution_error("packet spectrum under-resolved: weight near the Nyquist edge is " +
                               std::to_string(edge_weight / sweight) + " of the total");
    }
    smean /= sweight;
    double svar = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        const auto signed_j =
            static_cast<std::ptrdiff_t>(m) < half ? static_cast<std::ptrdiff_t>(m)
                                                  : static_cast<std::ptrdiff_t>(m) - static_cast<std::ptrdiff_t>(n);
        const double d = static_cast<double>(signed_j) - smean;
        svar += std::norm(spectrum[m]) * d * d;
    }
    svar /= sweight;

    // Parseval with Phi = spacing * DFT:
    //   sum |psi|^2 spacing = sum |Phi|^2 dk / (2 pi) = spacing/N sum|DFT|^2
    const double lhs = weight * spacing;
    const double rhs = spacing * sweight / static_cast<double>(n);
    CoreWidths out;
    out.delta_x = std::sqrt(var);
    out.delta_k = std::sqrt(svar) * dk;
    out.parseval_residual = std::abs(lhs - rhs) / lhs;
    out.spectral_centroid = smean * dk;
    return out;
}

Widths widths_impl(const SampledPacket& packet) {
    check_grid_contract(packet.samples, packet.spacing);
    const auto full = core_widths(packet.samples, packet.spacing, true);

    Widths w;
    w.delta_x = full.delta_x;
    w.delta_k = full.delta_k;
    w.product = full.delta_x * full.delta_k;
    w.parseval_residual = full.parseval_residual;
    w.spectral_centroid = full.spectral_centroid;

    // Grid-error estimate: compare against the half-resolution grid
    // (every other sample), plus a rounding floor.
    w.eps_grid = 1e-12 * (1.0 + w.product);
    if (packet.size() >= 32) {
        std::vector<std::complex<double>> half(packet.size() / 2);
        for (std::size_t j = 0; j < half.size(); ++j) half[j] = packet.samples[2 * j];
        const auto coarse = core_widths(half, 2.0 * packet.spacing, false);
        w.eps_grid += std::abs(coarse.delta_x * coarse.delta_k - w.product);
    }
    return w;
}

SampledPacket modulated_envelope(const Grid& grid, double k_center, Axis axis,
                                 const std::function<double(double)>& envelope) {
    if (grid.n < 16 || !fft::is_power_of_two(grid.n)) {
        throw config_error("packet grid: N must be a power of two >= 16");
    }
    if (!(grid.extent > 0.0)) throw config_error("packet grid: extent must be > 0");
    SampledPacket p;
    p.axis = axis;
    p.spacing = grid.extent / static_cast<double>(grid.n);
    p.samples.resize(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid_x(j, grid.n, p.spacing);
        p.samples[j] = envelope(x) * std::polar(1.0, k_center * x);
    }
    check_grid_contract(p.samples, p.spacing);
    return p;
}

} // namespace

SampledPacket build_gaussian_packet(double sigma, double k_center, const Grid& grid, Axis axis) {
    if (!(sigma > 0.0)) throw config_error("gaussian packet: sigma must be > 0");
    return modulated_envelope(grid, k_center, axis, [sigma](double x) {
        return std::exp(-x * x / (4.0 * sigma * sigma));
    });
}

SampledPacket build_hann_packet(double width, double k_center, const Grid& grid, Axis axis) {
    if (!(width > 0.0)) throw config_error("hann packet: width must be > 0");
    return modulated_envelope(grid, k_center, axis, [width](double x) {
        if (std::abs(x) > 0.5 * width) return 0.0;
        const double c = std::cos(std::numbers::pi * x / width);
        return c * c;
    });
}

SampledPacket tabulated_packet(std::vector<std::complex<double>> samples, double spacing,
                               Axis axis) {
    check_grid_contract(samples, spacing);
    SampledPacket p;
    p.samples = std::move(samples);
    p.spacing = spacing;
    p.axis = axis;
    return p;
}

Widths rms_widths(const SampledPacket& packet) {
    if (packet.axis != Axis::space) {
        throw config_error("rms_widths expects a space-axis packet");
    }
    return widths_impl(packet);
}

Widths time_frequency_widths(const SampledPacket& packet) {
    if (packet.axis != Axis::time) {
        throw config_error("time_frequency_widths expects a time-axis packet");
    }
    return widths_impl(packet);
}

} // namespace waveatom::packet
