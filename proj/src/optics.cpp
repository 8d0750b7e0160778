#include "ramanoam/optics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"

namespace ramanoam {

void SppSpec::validate() const {
    if (n_steps && *n_steps < 1) throw std::invalid_argument("SPP needs at least one step");
    if (!(design_wavelength > 0.0)) throw std::invalid_argument("SPP design wavelength must be positive");
}

double spp_phase_profile(double theta, const SppSpec& spp) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (!spp.n_steps) return t;
    const int n = *spp.n_steps;
    const double step = kTwoPi / n;
    // Guard against fmod rounding a value just below 2 pi up into step n.
    const double k = std::min(std::floor(t / step), static_cast<double>(n - 1));
    return k * step;
}

ComplexFieldGrid apply_spp(const ComplexFieldGrid& field, const SppSpec& spp) {
    spp.validate();
    const double depth = spp.design_charge * spp.design_wavelength / field.wavelength();
    const auto& s = field.spec();
    ComplexFieldGrid out = field;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i)
            out.at(i, j) *= std::polar(1.0, depth * spp_phase_profile(std::atan2(s.y(j), s.x(i)), spp));
    return out;
}

ComplexFieldGrid apply_mirror(const ComplexFieldGrid& field) {
    const auto& s = field.spec();
    ComplexFieldGrid out = field;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) out.at(i, j) = field.at((s.nx - i) % s.nx, j);
    return out;
}

int path_charge(int input_charge, ReflectionParity parity) {
    if (parity.count < 0) throw std::invalid_argument("reflection count must be non-negative");
    return parity.odd() ? -input_charge : input_charge;
}

ComplexFieldGrid apply_lens(const ComplexFieldGrid& field, double focal_length) {
    if (focal_length == 0.0 || !std::isfinite(focal_length))
        throw std::invalid_argument("lens focal length must be finite and non-zero");
    const auto& s = field.spec();
    const double k = field.wavenumber();
    const double edge_x = (s.nx / 2) * s.dx;
    const double edge_y = (s.ny / 2) * s.dy;
    if (k * edge_x * s.dx / std::abs(focal_length) > kPi || k * edge_y * s.dy / std::abs(focal_length) > kPi) {
        std::ostringstream msg;
        msg << "lens phase aliases at the grid edge for f = " << focal_length << " m; need |f| >= "
            << 2.0 * std::max(edge_x * s.dx, edge_y * s.dy) / field.wavelength() << " m";
        throw AliasingError(msg.str());
    }
    ComplexFieldGrid out = field;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) {
            const double r2 = s.x(i) * s.x(i) + s.y(j) * s.y(j);
            out.at(i, j) *= std::polar(1.0, -k * r2 / (2.0 * focal_length));
        }
    return out;
}

ComplexFieldGrid apply_tilt(const ComplexFieldGrid& field, double angle_x, double angle_y) {
    const auto& s = field.spec();
    const double lambda = field.wavelength();
    if (std::abs(std::sin(angle_x)) >= lambda / (2.0 * s.dx) || std::abs(std::sin(angle_y)) >= lambda / (2.0 * s.dy))
        throw AliasingError("tilt exceeds the sampling limit lambda / (2 pitch)");
    if (angle_x == 0.0 && angle_y == 0.0) return field;
    const double kx = field.wavenumber() * std::sin(angle_x);
    const double ky = field.wavenumber() * std::sin(angle_y);
    ComplexFieldGrid out = field;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) out.at(i, j) *= std::polar(1.0, kx * s.x(i) + ky * s.y(j));
    return out;
}

}  // namespace ramanoam
