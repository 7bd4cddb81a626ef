#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace waveatom::packet {

enum class Axis { space, time };

/// Complex samples on a uniform grid centered on the origin:
/// x_j = (j - N/2) * spacing. N must be a power of two >= 16 and the
/// envelope must be negligible at both ends of the grid (boundary
/// amplitude <= 1e-8 of the peak), otherwise widths are meaningless.
struct SampledPacket {
    std::vector<std::complex<double>> samples;
    double spacing = 0.0;
    Axis axis = Axis::space;

    std::size_t size() const { return samples.size(); }
};

struct Grid {
    std::size_t n = 4096;
    double extent = 40.0;
};

/// Gaussian envelope exp(-x^2/(4 sigma^2)) modulated by exp(i k_c x).
SampledPacket build_gaussian_packet(double sigma, double k_center, const Grid& grid,
                                    Axis axis = Axis::space);

/// cos^2(pi x / width) on |x| <= width/2 (zero outside), modulated by
/// exp(i k_c x).
SampledPacket build_hann_packet(double width, double k_center, const Grid& grid,
                                Axis axis = Axis::space);

/// Wraps externally supplied samples, enforcing the same grid contract.
SampledPacket tabulated_packet(std::vector<std::complex<double>> samples, double spacing,
                               Axis axis = Axis::space);

struct Widths {
    double delta_x = 0.0;         ///< RMS width under |psi|^2
    double delta_k = 0.0;         ///< RMS spectral width under |Phi|^2
    double product = 0.0;         ///< delta_x * delta_k
    double eps_grid = 0.0;        ///< grid-error estimate for the >= 1/2 bound
    double parseval_residual = 0.0;
    double spectral_centroid = 0.0;
};

/// RMS position/wavenumber widths about the centroids. The spectrum is
/// the unnormalized forward DFT scaled by the grid spacing, wavenumbers
/// k_j = 2 pi j/(N spacing) with j centered. Spectral weight within 3
/// bins of the Nyquist edge above 1e-6 of the total means the packet is
/// under-resolved and is rejected.
Widths rms_widths(const SampledPacket& packet);

/// Same machinery on the time axis (delta_t, delta_omega).
Widths time_frequency_widths(const SampledPacket& packet);

} // namespace waveatom::packet
