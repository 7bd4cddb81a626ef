"""Python bindings for the waveatom numerical core."""

from ._core import (  # noqa: F401
    AtomScreen,
    ConfigError,
    DomainError,
    KinematicsError,
    PhysicalConstants,
    ResolutionError,
    Snapshot,
    compton_shift,
    compton_solve,
    compton_wavelength,
    constants,
    constants_version,
    cumulative_excitation_probability,
    detection_ratio,
    dispersion,
    double_slit_intensity,
    electron_mass_from_frequency,
    excitation_rate,
    expected_count,
    gaussian_packet_widths,
    generate_screen,
    hann_packet_widths,
    hydrogen_excitation_cross_section,
    plane_wave_densities,
    pointwise_densities,
    portion,
    portion_spin,
    rate_coefficient,
    run_double_slit_exposure,
    scattered_frequency,
    survival_probability,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
