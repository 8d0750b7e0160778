#pragma once

#include <numbers>

namespace ramanoam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Spectroscopy units: wavenumbers are in cm^-1.
inline constexpr double wavenumber_to_angular(double wavenumber_cm) {
    return kTwoPi * kSpeedOfLight * 100.0 * wavenumber_cm;
}
inline constexpr double angular_to_wavenumber(double omega) {
    return omega / (kTwoPi * kSpeedOfLight * 100.0);
}
inline constexpr double wavelength_to_angular(double wavelength_m) {
    return kTwoPi * kSpeedOfLight / wavelength_m;
}
inline constexpr double angular_to_wavelength(double omega) {
    return kTwoPi * kSpeedOfLight / omega;
}

}  // namespace ramanoam
