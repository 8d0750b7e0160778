#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ramanoam/field.hpp"

namespace testsupport {

using ramanoam::Complex;
using ramanoam::ComplexFieldGrid;
using ramanoam::GridSpec;

inline constexpr double kPi = 3.14159265358979323846;

// Seeded generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Discrete <a|b> with dx dy weighting, computed directly from the samples.
inline Complex inner(const ComplexFieldGrid& a, const ComplexFieldGrid& b) {
    Complex s{0.0, 0.0};
    for (std::size_t n = 0; n < a.values().size(); ++n) s += std::conj(a.values()[n]) * b.values()[n];
    return s * a.spec().cell_area();
}

// 1/e^2 intensity radius from the second moment of |u|^2 along x.
inline double second_moment_width(const ComplexFieldGrid& f) {
    const auto& g = f.spec();
    double s0 = 0.0, sx = 0.0, sxx = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double w = std::norm(f.at(i, j));
            s0 += w;
            sx += w * g.x(i);
            sxx += w * g.x(i) * g.x(i);
        }
    const double mean = sx / s0;
    return 2.0 * std::sqrt(sxx / s0 - mean * mean);
}

inline ComplexFieldGrid plane_wave(const GridSpec& g, double wavelength, double amplitude = 1.0) {
    return ComplexFieldGrid(g, wavelength, std::vector<Complex>(g.size(), Complex{amplitude, 0.0}));
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

}  // namespace testsupport
