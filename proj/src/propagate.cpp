#include <cmath>
#include <sstream>

#include "ramanoam/beam.hpp"
#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"
#include "ramanoam/fft.hpp"

namespace ramanoam {

namespace {

// Spectral power allowed outside the band where the transfer-function phase is
// sampled at better than pi per frequency bin.
constexpr double kAliasedPowerTolerance = 1e-8;

}  // namespace

ComplexFieldGrid propagate(const ComplexFieldGrid& field, double distance) {
    if (distance == 0.0) return field;

    const auto& s = field.spec();
    const double lambda = field.wavelength();
    const double k = field.wavenumber();
    const double dfx = 1.0 / (s.nx * s.dx);
    const double dfy = 1.0 / (s.ny * s.dy);
    const double limit_x = 1.0 / (lambda * std::sqrt(std::pow(2.0 * std::abs(distance) * dfx, 2) + 1.0));
    const double limit_y = 1.0 / (lambda * std::sqrt(std::pow(2.0 * std::abs(distance) * dfy, 2) + 1.0));

    std::vector<Complex> spectrum = field.values();
    fft::transform_2d(spectrum, s.nx, s.ny, fft::Direction::Forward);

    double total = 0.0, outside = 0.0;
    for (int j = 0; j < s.ny; ++j) {
        const double fy = fft::signed_bin(j, s.ny) * dfy;
        for (int i = 0; i < s.nx; ++i) {
            const double fx = fft::signed_bin(i, s.nx) * dfx;
            const double pw = std::norm(spectrum[s.index(i, j)]);
            total += pw;
            if (std::abs(fx) > limit_x || std::abs(fy) > limit_y) outside += pw;
        }
    }
    if (total > 0.0 && outside > kAliasedPowerTolerance * total) {
        std::ostringstream msg;
        msg << "angular-spectrum transfer function aliases at distance " << distance << " m ("
            << outside / total << " of the power lies outside the representable band); use a larger grid";
        throw AliasingError(msg.str());
    }

    for (int j = 0; j < s.ny; ++j) {
        const double fy = fft::signed_bin(j, s.ny) * dfy;
        for (int i = 0; i < s.nx; ++i) {
            const double fx = fft::signed_bin(i, s.nx) * dfx;
            const double q = lambda * lambda * (fx * fx + fy * fy);
            auto& v = spectrum[s.index(i, j)];
            if (q >= 1.0) {
                v = 0.0;
                continue;
            }
            // kz - k without cancellation; the e^{ikz} carrier is factored out.
            const double dkz = -k * q / (1.0 + std::sqrt(1.0 - q));
            v *= std::polar(1.0, dkz * distance);
        }
    }
    fft::transform_2d(spectrum, s.nx, s.ny, fft::Direction::Inverse);
    return ComplexFieldGrid(s, lambda, std::move(spectrum));
}

}  // namespace ramanoam
