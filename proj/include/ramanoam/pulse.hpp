#pragma once

#include <span>
#include <vector>

#include "ramanoam/field.hpp"
#include "ramanoam/raman.hpp"

namespace ramanoam {

// nt samples at t_i = (i - nt/2) dt.
struct TimeGrid {
    int nt = 0;
    double dt = 0.0;  // s

    void validate() const;  // nt >= 64, dt > 0
    double t(int i) const { return (i - nt / 2) * dt; }
    double duration() const { return nt * dt; }
};

// Two identical linearly chirped Gaussians, E(t) = exp(-t^2/(2 tau^2) + i(omega_0 t + b t^2/2)),
// centred at -t_d/2 and +t_d/2.
struct ChirpedPulsePair {
    double tau = 0.0;      // s
    double b = 0.0;        // rad/s^2
    double t_d = 0.0;      // s
    double omega_0 = 0.0;  // rad/s

    void validate() const;  // tau > 0, t_d >= 0
};

// b * t_d.
double beat_frequency(const ChirpedPulsePair& pair);

// Delay that puts the beat note on omega_R for chirp rate b.
double matching_delay(double omega_R, double b);

// 2 pi / omega.
double oscillation_period(double omega);

// Throws std::invalid_argument if the grid cannot hold both pulses (span
// < 4 tau + t_d) and AliasingError if the instantaneous frequency anywhere on
// the grid reaches pi / dt.
std::vector<Complex> chirped_pair_field(const ChirpedPulsePair& pair, const TimeGrid& grid);

std::vector<double> intensity_of(std::span<const Complex> field);

// Angular frequency of the strongest spectral peak of the intensity outside
// the low-frequency lobe, sub-bin interpolated. Throws NoPeriodicStructureError.
double envelope_modulation_frequency(std::span<const double> intensity, const TimeGrid& grid);

// I(t) = |sum_k A_k exp(-i omega_k t + i phi_k)|^2. `phases` is empty (flat) or
// one entry per channel. Throws NyquistError if any omega_k >= pi / dt.
std::vector<double> synthesize_waveform(const SpectralComb& comb, const TimeGrid& grid,
                                        std::span<const double> phases = {});

// Period from the dominant non-zero-lag autocorrelation peak (unbiased
// estimate, parabolic sub-sample refinement). Throws NoPeriodicStructureError.
double train_period(std::span<const double> series, double dt);

}  // namespace ramanoam
