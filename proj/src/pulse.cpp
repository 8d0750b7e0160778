#include "ramanoam/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"
#include "ramanoam/fft.hpp"

namespace ramanoam {

void TimeGrid::validate() const {
    if (nt < 64) throw std::invalid_argument("time grid needs at least 64 samples");
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
}

void ChirpedPulsePair::validate() const {
    if (!(tau > 0.0)) throw std::invalid_argument("pulse duration tau must be positive");
    if (!(t_d >= 0.0)) throw std::invalid_argument("pump-Stokes delay must be non-negative");
}

double beat_frequency(const ChirpedPulsePair& pair) { return pair.b * pair.t_d; }

double matching_delay(double omega_R, double b) {
    if (b == 0.0) throw std::invalid_argument("an unchirped pair cannot be delay-matched");
    return omega_R / b;
}

double oscillation_period(double omega) { return kTwoPi / omega; }

std::vector<Complex> chirped_pair_field(const ChirpedPulsePair& pair, const TimeGrid& grid) {
    pair.validate();
    grid.validate();
    if (grid.duration() < 4.0 * pair.tau + pair.t_d)
        throw std::invalid_argument("time grid does not span both pulses (need >= 4 tau + t_d)");
    const double t_edge = 0.5 * grid.duration() + 0.5 * pair.t_d;
    if (std::abs(pair.omega_0) + std::abs(pair.b) * t_edge >= kPi / grid.dt)
        throw AliasingError("instantaneous frequency of the chirped pair exceeds pi/dt");

    auto pulse = [&](double t) {
        return std::exp(Complex(-t * t / (2.0 * pair.tau * pair.tau), pair.omega_0 * t + 0.5 * pair.b * t * t));
    };
    std::vector<Complex> out(grid.nt);
    for (int i = 0; i < grid.nt; ++i) {
        const double t = grid.t(i);
        out[i] = pulse(t + 0.5 * pair.t_d) + pulse(t - 0.5 * pair.t_d);
    }
    return out;
}

std::vector<double> intensity_of(std::span<const Complex> field) {
    std::vector<double> out(field.size());
    std::transform(field.begin(), field.end(), out.begin(), [](Complex v) { return std::norm(v); });
    return out;
}

double envelope_modulation_frequency(std::span<const double> intensity, const TimeGrid& grid) {
    grid.validate();
    if (intensity.size() != static_cast<std::size_t>(grid.nt))
        throw std::invalid_argument("intensity length does not match the time grid");
    const double mean = std::accumulate(intensity.begin(), intensity.end(), 0.0) / grid.nt;
    std::vector<Complex> spec(grid.nt);
    for (int i = 0; i < grid.nt; ++i) spec[i] = intensity[i] - mean;
    fft::transform_1d(spec, fft::Direction::Forward);

    const int half = grid.nt / 2;
    std::vector<double> mag(half + 1);
    for (int i = 0; i <= half; ++i) mag[i] = std::abs(spec[i]);
    const double top = *std::max_element(mag.begin() + 1, mag.end());
    if (!(top > 0.0)) throw NoPeriodicStructureError("intensity is constant");

    int start = 1;
    while (start + 1 <= half && mag[start + 1] <= mag[start]) ++start;
    int best = -1;
    for (int i = start + 1; i < half; ++i)
        if (best < 0 || mag[i] > mag[best]) best = i;
    if (best < 0 || mag[best] < 1e-3 * top || mag[best] <= mag[start])
        throw NoPeriodicStructureError("no envelope modulation found");

    const double a = mag[best - 1], b = mag[best], c = mag[best + 1];
    const double denom = a - 2.0 * b + c;
    const double delta = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
    return kTwoPi * (best + delta) / grid.duration();
}

std::vector<double> synthesize_waveform(const SpectralComb& comb, const TimeGrid& grid, std::span<const double> phases) {
    grid.validate();
    if (!phases.empty() && phases.size() != comb.channels.size())
        throw std::invalid_argument("need one phase per comb channel");
    for (const auto& ch : comb.channels)
        if (std::abs(ch.omega) >= kPi / grid.dt) {
            std::ostringstream msg;
            msg << "channel " << ch.label.name() << " at " << ch.omega << " rad/s is above the grid Nyquist frequency";
            throw NyquistError(msg.str());
        }

    std::vector<double> out(grid.nt);
    for (int i = 0; i < grid.nt; ++i) {
        const double t = grid.t(i);
        Complex sum{};
        for (std::size_t k = 0; k < comb.channels.size(); ++k) {
            const double phi = phases.empty() ? 0.0 : phases[k];
            sum += comb.channels[k].amplitude * std::polar(1.0, -comb.channels[k].omega * t + phi);
        }
        out[i] = std::norm(sum);
    }
    return out;
}

double train_period(std::span<const double> series, double dt) {
    const std::size_t n = series.size();
    if (n < 8 || !(dt > 0.0)) throw std::invalid_argument("train_period needs a sampled series");
    const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);

    // Autocorrelation by zero-padded FFT.
    std::vector<Complex> buf(2 * n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = series[i] - mean;
    fft::transform_1d(buf, fft::Direction::Forward);
    for (auto& v : buf) v = std::norm(v);
    fft::transform_1d(buf, fft::Direction::Inverse);

    const std::size_t max_lag = n / 2;
    std::vector<double> ac(max_lag + 1);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) ac[lag] = buf[lag].real() / static_cast<double>(n - lag);
    if (!(ac[0] > 1e-24 * std::max(1.0, mean * mean))) throw NoPeriodicStructureError("series is constant");

    // Local maxima standing clear of the preceding minimum by 5% of the variance.
    std::vector<std::size_t> peaks;
    double trough = ac[0];
    for (std::size_t lag = 1; lag < max_lag; ++lag) {
        trough = std::min(trough, ac[lag]);
        if (ac[lag] > ac[lag - 1] && ac[lag] >= ac[lag + 1] && ac[lag] - trough > 0.05 * ac[0]) {
            peaks.push_back(lag);
            trough = ac[lag];
        }
    }
    if (peaks.empty()) throw NoPeriodicStructureError("no periodic structure in the series");

    double highest = ac[peaks.front()];
    for (auto p : peaks) highest = std::max(highest, ac[p]);
    std::size_t pick = peaks.front();
    for (auto p : peaks)
        if (ac[p] >= highest - 0.1 * std::abs(highest)) {
            pick = p;
            break;
        }

    const double a = ac[pick - 1], b = ac[pick], c = ac[pick + 1];
    const double denom = a - 2.0 * b + c;
    const double delta = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
    return (static_cast<double>(pick) + delta) * dt;
}

}  // namespace ramanoam
