#include "ramanoam/beam.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"

namespace ramanoam {

void BeamParams::validate() const {
    if (!(waist_w0 > 0.0)) throw std::invalid_argument("beam waist must be positive");
    if (!(wavelength > 0.0)) throw std::invalid_argument("beam wavelength must be positive");
}

double BeamParams::rayleigh_range() const { return kPi * waist_w0 * waist_w0 / wavelength; }

double BeamParams::width_at(double z) const {
    const double zr = rayleigh_range();
    return waist_w0 * std::sqrt(1.0 + (z / zr) * (z / zr));
}

ComplexFieldGrid lg_mode_field(LGModeIndex index, const BeamParams& beam, const GridSpec& spec, double z) {
    beam.validate();
    spec.validate();
    if (index.p < 0) throw std::invalid_argument("LG radial index p must be non-negative");
    if (beam.waist_w0 < 4.0 * std::max(spec.dx, spec.dy)) {
        std::ostringstream msg;
        msg << "grid pitch " << std::max(spec.dx, spec.dy) << " m cannot resolve waist " << beam.waist_w0
            << " m (need at least 4 samples per waist)";
        throw ResolutionError(msg.str());
    }

    const int p = index.p;
    const int m = std::abs(index.ell);
    const double zr = beam.rayleigh_range();
    const double w = beam.width_at(z);
    const double k = kTwoPi / beam.wavelength;
    const double inv_r_curv = z / (z * z + zr * zr);
    const double gouy = (2 * p + m + 1) * std::atan2(z, zr);
    const double norm = std::sqrt(2.0 / kPi * std::exp(std::lgamma(p + 1.0) - std::lgamma(p + m + 1.0))) / w;

    ComplexFieldGrid out(spec, beam.wavelength);
    for (int j = 0; j < spec.ny; ++j) {
        const double y = spec.y(j);
        for (int i = 0; i < spec.nx; ++i) {
            const double x = spec.x(i);
            const double r2 = x * x + y * y;
            const double s = 2.0 * r2 / (w * w);
            const double radial = norm * std::pow(std::sqrt(s), m) *
                                  std::assoc_laguerre(static_cast<unsigned>(p), static_cast<unsigned>(m), s) *
                                  std::exp(-r2 / (w * w));
            const double phase = index.ell * std::atan2(y, x) + 0.5 * k * r2 * inv_r_curv - gouy;
            out.at(i, j) = std::polar(radial, phase);
        }
    }
    return out;
}

double ModeDecomposition::column_power(int ell) const {
    double s = 0.0;
    for (const auto& [idx, c] : coefficients)
        if (idx.ell == ell) s += std::norm(c);
    return s;
}

Complex ModeDecomposition::coefficient(int p, int ell) const {
    auto it = coefficients.find({p, ell});
    return it == coefficients.end() ? Complex{} : it->second;
}

ModeDecomposition decompose(const ComplexFieldGrid& field, const BeamParams& beam, int p_max, int ell_min,
                            int ell_max, double z) {
    if (p_max < 0 || ell_min > ell_max) throw std::invalid_argument("empty LG basis");
    if (std::abs(field.wavelength() - beam.wavelength) > 1e-12 * beam.wavelength)
        throw std::invalid_argument("decompose: field and basis wavelengths differ");

    ModeDecomposition out;
    out.field_power = field.power();
    const double area = field.spec().cell_area();
    const auto& u = field.values();
    for (int ell = ell_min; ell <= ell_max; ++ell) {
        for (int p = 0; p <= p_max; ++p) {
            const auto mode = lg_mode_field({p, ell}, beam, field.spec(), z);
            Complex acc{};
            const auto& b = mode.values();
            for (std::size_t n = 0; n < u.size(); ++n) acc += std::conj(b[n]) * u[n];
            acc *= area;
            out.coefficients[{p, ell}] = acc;
            out.captured_power += std::norm(acc);
        }
    }
    return out;
}

double radial_profile_peak(std::span<const double> image, const GridSpec& spec, double cx, double cy) {
    if (image.size() != spec.size()) throw std::invalid_argument("radial profile: image size mismatch");
    const double bin = std::min(spec.dx, spec.dy);
    const double rmax = std::hypot(spec.nx * spec.dx, spec.ny * spec.dy);
    const std::size_t nbins = static_cast<std::size_t>(rmax / bin) + 2;
    std::vector<double> sum(nbins, 0.0), rsum(nbins, 0.0), count(nbins, 0.0);
    for (int j = 0; j < spec.ny; ++j) {
        for (int i = 0; i < spec.nx; ++i) {
            const double r = std::hypot(spec.x(i) - cx, spec.y(j) - cy);
            const auto b = static_cast<std::size_t>(std::floor(r / bin + 0.5));
            if (b >= nbins) continue;
            sum[b] += image[spec.index(i, j)];
            rsum[b] += r;
            count[b] += 1.0;
        }
    }
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t b = 0; b < nbins; ++b) {
        if (count[b] == 0.0) continue;
        const double mean = sum[b] / count[b];
        if (mean > best_val) {
            best_val = mean;
            best = b;
        }
    }
    if (best == 0 || best + 1 >= nbins || count[best - 1] == 0.0 || count[best + 1] == 0.0) return 0.0;

    // Parabola through the three (mean radius, mean value) points around the maximum.
    const double r0 = rsum[best - 1] / count[best - 1], r1 = rsum[best] / count[best],
                 r2 = rsum[best + 1] / count[best + 1];
    const double f0 = sum[best - 1] / count[best - 1], f1 = best_val, f2 = sum[best + 1] / count[best + 1];
    const double d01 = (f1 - f0) / (r1 - r0);
    const double d12 = (f2 - f1) / (r2 - r1);
    const double a = (d12 - d01) / (r2 - r0);
    if (!(a < 0.0)) return r1;
    // Newton form f(r) = f0 + d01 (r - r0) + a (r - r0)(r - r1).
    const double vertex = 0.5 * (r0 + r1) - d01 / (2.0 * a);
    return std::clamp(vertex, r0, r2);
}

double ring_radius(const ComplexFieldGrid& field) {
    const auto inten = field.intensity();
    return radial_profile_peak(inten, field.spec());
}

double phase_winding(const ComplexFieldGrid& field, double loop_radius, double cx, double cy) {
    const auto& s = field.spec();
    if (!(loop_radius > 0.0)) throw std::invalid_argument("loop radius must be positive");
    const double half_w = (s.nx / 2 - 1) * s.dx;
    const double half_h = (s.ny / 2 - 1) * s.dy;
    if (std::abs(cx) + loop_radius > half_w || std::abs(cy) + loop_radius > half_h)
        throw std::invalid_argument("circulation loop leaves the grid");

    const double step = 0.25 * std::min(s.dx, s.dy);
    const int n = std::max(256, static_cast<int>(std::ceil(kTwoPi * loop_radius / step)));
    double total = 0.0;
    Complex prev = field.sample(cx + loop_radius, cy);
    for (int q = 1; q <= n; ++q) {
        const double t = kTwoPi * q / n;
        const Complex cur = field.sample(cx + loop_radius * std::cos(t), cy + loop_radius * std::sin(t));
        total += std::arg(cur * std::conj(prev));
        prev = cur;
    }
    return total / kTwoPi;
}

int measure_charge_circulation(const ComplexFieldGrid& field, double loop_radius) {
    const double w = phase_winding(field, loop_radius);
    const double nearest = std::round(w);
    if (std::abs(w - nearest) > 0.25) {
        std::ostringstream msg;
        msg << "phase circulation " << w << " is not close to an integer";
        throw AmbiguityError(msg.str());
    }
    return static_cast<int>(nearest);
}

}  // namespace ramanoam
