#include "waveatom/wavepacket.hpp"

#include "waveatom/constants.hpp"
#include "waveatom/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace waveatom;

namespace {

// Continuous-integral oracle for the cos^2 envelope, by composite
// Simpson quadrature: delta_x from the x^2 moment of cos^4, delta_k from
// the derivative norm (Parseval route), independent of any FFT.
double hann_product_oracle(double width) {
    const int intervals = 20000;
    const double h = width / intervals; // integrate over the support
    auto psi2 = [&](double x) {
        const double c = std::cos(std::numbers::pi * x / width);
        return c * c * c * c;
    };
    auto dpsi2 = [&](double x) {
        const double d = -2.0 * std::cos(std::numbers::pi * x / width) *
                         std::sin(std::numbers::pi * x / width) * std::numbers::pi / width;
        return d * d;
    };
    double w0 = 0.0, wx2 = 0.0, wd = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double x = -0.5 * width + h * i;
        const double coeff = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        w0 += coeff * psi2(x);
        wx2 += coeff * x * x * psi2(x);
        wd += coeff * dpsi2(x);
    }
    return std::sqrt(wx2 / w0) * std::sqrt(wd / w0);
}

} // namespace

TEST_CASE("gaussian packet saturates the lower bound") {
    const auto p = packet::build_gaussian_packet(1.0, 0.0, {4096, 40.0});
    const auto w = packet::rms_widths(p);
    CHECK(w.delta_x == doctest::Approx(1.0).epsilon(0.005));
    CHECK(w.delta_k == doctest::Approx(0.5).epsilon(0.005));
    CHECK(w.product == doctest::Approx(0.5).epsilon(0.005));
    CHECK(w.parseval_residual < 1e-10);
    CHECK(w.product >= 0.5 - w.eps_grid);
}

TEST_CASE("carrier modulation shifts the spectral centroid only") {
    const auto base = packet::rms_widths(packet::build_gaussian_packet(1.0, 0.0, {4096, 40.0}));
    const auto mod = packet::rms_widths(packet::build_gaussian_packet(1.0, 5.0, {4096, 40.0}));
    CHECK(mod.delta_x == doctest::Approx(base.delta_x).epsilon(1e-9));
    CHECK(mod.delta_k == doctest::Approx(base.delta_k).epsilon(1e-6));
    CHECK(mod.spectral_centroid == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(std::abs(base.spectral_centroid) < 1e-6);
}

TEST_CASE("hann packet exceeds the bound and matches the quadrature oracle") {
    const auto p = packet::build_hann_packet(10.0, 0.0, {4096, 40.0});
    const auto w = packet::rms_widths(p);
    CHECK(w.product > 0.5);
    const double oracle = hann_product_oracle(10.0);
    CHECK(std::abs(w.product - oracle) / oracle < 0.01);
    CHECK(w.parseval_residual < 1e-10);
}

TEST_CASE("hann envelope vanishes outside its support") {
    const auto p = packet::build_hann_packet(10.0, 0.0, {1024, 40.0});
    for (std::size_t j = 0; j < p.size(); ++j) {
        const double x = (static_cast<double>(j) - 512.0) * p.spacing;
        if (std::abs(x) > 5.0) CHECK(std::abs(p.samples[j]) == 0.0);
    }
}

TEST_CASE("dilation maps the widths covariantly") {
    const auto a = packet::rms_widths(packet::build_gaussian_packet(1.0, 0.0, {4096, 40.0}));
    const auto b = packet::rms_widths(packet::build_gaussian_packet(2.0, 0.0, {4096, 80.0}));
    CHECK(b.delta_x == doctest::Approx(2.0 * a.delta_x).epsilon(1e-3));
    CHECK(b.delta_k == doctest::Approx(0.5 * a.delta_k).epsilon(1e-3));
    CHECK(b.product == doctest::Approx(a.product).epsilon(1e-3));
}

TEST_CASE("time-axis machinery") {
    const auto p = packet::build_gaussian_packet(1.0, 0.0, {4096, 40.0}, packet::Axis::time);
    const auto w = packet::time_frequency_widths(p);
    CHECK(w.product == doctest::Approx(0.5).epsilon(0.005));
    // compressing the pulse by 2 doubles the bandwidth
    const auto half =
        packet::time_frequency_widths(packet::build_gaussian_packet(0.5, 0.0, {4096, 20.0},
                                                                    packet::Axis::time));
    CHECK(half.delta_k == doctest::Approx(2.0 * w.delta_k).epsilon(0.005));
    const auto pulse = packet::time_frequency_widths(
        packet::build_hann_packet(6.0, 0.0, {4096, 30.0}, packet::Axis::time));
    CHECK(pulse.product > 0.5);
    CHECK(std::abs(pulse.product - hann_product_oracle(6.0)) / pulse.product < 0.01);
    CHECK_THROWS_AS(packet::rms_widths(p), config_error);
    const auto sp = packet::build_gaussian_packet(1.0, 0.0, {4096, 40.0});
    CHECK_THROWS_AS(packet::time_frequency_widths(sp), config_error);
}

TEST_CASE("hbar mapping is a plain multiplication") {
    const auto& kc = PhysicalConstants::codata2014();
    const auto w = packet::rms_widths(packet::build_gaussian_packet(1.0, 0.0, {1024, 40.0}));
    CHECK(kc.hbar * w.product ==
          doctest::Approx(w.delta_x * (kc.hbar * w.delta_k)).epsilon(1e-15));
}

TEST_CASE("boundary violations are rejected with the measured ratio") {
    CHECK_THROWS_AS(packet::build_gaussian_packet(5.0, 0.0, {1024, 20.0}), config_error);
    try {
        packet::build_gaussian_packet(5.0, 0.0, {1024, 20.0});
    } catch (const config_error& e) {
        CHECK(doctest::String(e.what()).size() > 0);
    }
}

TEST_CASE("grid contract violations") {
    CHECK_THROWS_AS(packet::build_gaussian_packet(1.0, 0.0, {48, 40.0}), config_error);
    CHECK_THROWS_AS(packet::build_gaussian_packet(1.0, 0.0, {8, 40.0}), config_error);
    CHECK_THROWS_AS(packet::build_gaussian_packet(1.0, 0.0, {1024, -1.0}), config_error);
    CHECK_THROWS_AS(packet::tabulated_packet(std::vector<std::complex<double>>(64), 0.1),
                    config_error); // zero weight
}

TEST_CASE("a delta-like sample is under-resolved") {
    std::vector<std::complex<double>> samples(64, {0.0, 0.0});
    samples[32] = {1.0, 0.0};
    const auto p = packet::tabulated_packet(std::move(samples), 0.5);
    CHECK_THROWS_AS(packet::rms_widths(p), resolution_error);
}

TEST_CASE("an ideal rectangular pulse is under-resolved") {
    std::vector<std::complex<double>> samples(1024, {0.0, 0.0});
    const double h = 40.0 / 1024.0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const double x = (static_cast<double>(j) - 512.0) * h;
        if (std::abs(x) <= 5.0) samples[j] = {1.0, 0.0};
    }
    const auto p = packet::tabulated_packet(std::move(samples), h);
    CHECK_THROWS_AS(packet::rms_widths(p), resolution_error);
}
