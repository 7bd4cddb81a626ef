#pragma once

#include <complex>
#include <vector>

namespace waveatom::fft {

/// In-place radix-2 forward DFT, X[m] = sum_j x[j] exp(-2 pi i m j / N),
/// unnormalized. N must be a power of two.
void transform(std::vector<std::complex<double>>& data);

bool is_power_of_two(std::size_t n);

} // namespace waveatom::fft
