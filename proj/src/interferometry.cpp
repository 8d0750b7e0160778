#include "ramanoam/interferometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "ramanoam/beam.hpp"
#include "ramanoam/constants.hpp"
#include "ramanoam/errors.hpp"
#include "ramanoam/fft.hpp"

namespace ramanoam {

const char* to_string(ReadingMethod m) {
    return m == ReadingMethod::Circulation ? "circulation" : "fork_count";
}

namespace {

std::vector<Complex> translated_y(const ComplexFieldGrid& field, double offset_y) {
    const auto& s = field.spec();
    std::vector<Complex> spec = field.values();
    fft::transform_2d(spec, s.nx, s.ny, fft::Direction::Forward);
    for (int j = 0; j < s.ny; ++j) {
        const double fy = fft::signed_bin(j, s.ny) / (s.ny * s.dy);
        const Complex ramp = std::polar(1.0, -kTwoPi * fy * offset_y);
        for (int i = 0; i < s.nx; ++i) spec[s.index(i, j)] *= ramp;
    }
    fft::transform_2d(spec, s.nx, s.ny, fft::Direction::Inverse);
    return spec;
}

// Smooth disk: flat to 75% of the radius, cosine roll-off to zero at the edge.
double disk_taper(double rho) {
    if (rho <= 0.75) return 1.0;
    if (rho >= 1.0) return 0.0;
    const double c = std::cos(0.5 * kPi * (rho - 0.75) / 0.25);
    return c * c;
}

double sample_real(const std::vector<double>& img, const GridSpec& s, double x, double y) {
    const double fi = x / s.dx + s.nx / 2;
    const double fj = y / s.dy + s.ny / 2;
    const int i0 = static_cast<int>(std::floor(fi));
    const int j0 = static_cast<int>(std::floor(fj));
    if (i0 < 0 || j0 < 0 || i0 + 1 >= s.nx || j0 + 1 >= s.ny) return 0.0;
    const double tx = fi - i0, ty = fj - j0;
    return (1 - tx) * (1 - ty) * img[s.index(i0, j0)] + tx * (1 - ty) * img[s.index(i0 + 1, j0)] +
           (1 - tx) * ty * img[s.index(i0, j0 + 1)] + tx * ty * img[s.index(i0 + 1, j0 + 1)];
}

// Carrier (bins) from the dominant off-axis peak of |F|.
std::optional<std::array<double, 2>> detect_carrier_bins(const std::vector<Complex>& F, const GridSpec& s) {
    const double dc = std::abs(F[0]);
    if (!(dc > 0.0)) return std::nullopt;

    const int rmax = static_cast<int>(std::hypot(s.nx / 2, s.ny / 2)) + 2;
    std::vector<double> ring_max(rmax + 1, 0.0);
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) {
            const int r = static_cast<int>(std::lround(std::hypot(fft::signed_bin(i, s.nx), fft::signed_bin(j, s.ny))));
            ring_max[r] = std::max(ring_max[r], std::abs(F[s.index(i, j)]));
        }
    // Walk out of the central lobe to its first local minimum.
    int exclude = 1;
    while (exclude + 1 <= rmax && ring_max[exclude + 1] <= ring_max[exclude]) ++exclude;

    double best = 0.0;
    int bi = 0, bj = 0;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) {
            const int fx = fft::signed_bin(i, s.nx), fy = fft::signed_bin(j, s.ny);
            if (std::hypot(fx, fy) <= std::max(exclude, 2)) continue;
            const double a = std::abs(F[s.index(i, j)]);
            if (a > best) {
                best = a;
                bi = fx;
                bj = fy;
            }
        }
    if (best <= 1e-6 * dc) return std::nullopt;

    // The cross-term spectrum of a vortex is a ring around the carrier, so
    // recenter on the power centroid of the neighbourhood.
    double cx = bi, cy = bj;
    const double radius = 0.5 * std::hypot(bi, bj);
    for (int iter = 0; iter < 4; ++iter) {
        double w = 0.0, sx = 0.0, sy = 0.0;
        for (int j = 0; j < s.ny; ++j)
            for (int i = 0; i < s.nx; ++i) {
                const int fx = fft::signed_bin(i, s.nx), fy = fft::signed_bin(j, s.ny);
                if (std::hypot(fx - cx, fy - cy) > radius) continue;
                const double p = std::norm(F[s.index(i, j)]);
                w += p;
                sx += p * fx;
                sy += p * fy;
            }
        if (!(w > 0.0)) break;
        cx = sx / w;
        cy = sy / w;
    }
    return std::array<double, 2>{cx, cy};
}

struct Core {
    bool singular = false;
    double cx = 0.0, cy = 0.0;  // loop center, m
    double radius = 0.0;        // loop radius, m
};

Core locate_core(const std::vector<double>& env, const GridSpec& s) {
    Core core;
    double w = 0.0, sx = 0.0, sy = 0.0;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) {
            const double p = env[s.index(i, j)] * env[s.index(i, j)];
            w += p;
            sx += p * s.x(i);
            sy += p * s.y(j);
        }
    if (!(w > 0.0)) return core;
    const double gx = sx / w, gy = sy / w;
    const double pitch = std::max(s.dx, s.dy);
    const double ring = radial_profile_peak(env, s, gx, gy);

    if (ring < 1.5 * pitch) {
        // No hole in the envelope: integrate on its rms radius for the residual.
        double m2 = 0.0;
        for (int j = 0; j < s.ny; ++j)
            for (int i = 0; i < s.nx; ++i) {
                const double p = env[s.index(i, j)] * env[s.index(i, j)];
                m2 += p * (std::pow(s.x(i) - gx, 2) + std::pow(s.y(j) - gy, 2));
            }
        core.cx = gx;
        core.cy = gy;
        core.radius = std::max(std::sqrt(m2 / w), 2.0 * pitch);
        return core;
    }

    // Envelope minimum inside the ring; ties go to the point nearest the grid center.
    double best = std::numeric_limits<double>::infinity(), best_r0 = 0.0;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) {
            if (std::hypot(s.x(i) - gx, s.y(j) - gy) > 0.5 * ring) continue;
            const double e = env[s.index(i, j)];
            const double r0 = std::hypot(s.x(i), s.y(j));
            if (e < best || (e == best && r0 < best_r0)) {
                best = e;
                best_r0 = r0;
                core.cx = s.x(i);
                core.cy = s.y(j);
            }
        }
    core.singular = true;
    core.radius = ring;
    return core;
}

double fit_loop_radius(const GridSpec& s, double cx, double cy, double radius) {
    const double half_w = (s.nx / 2 - 1) * s.dx;
    const double half_h = (s.ny / 2 - 1) * s.dy;
    return std::min({radius, half_w - std::abs(cx), half_h - std::abs(cy)});
}

}  // namespace

Interferogram synthesize_interferogram(const ComplexFieldGrid& vortex, const ComplexFieldGrid& reference,
                                       Carrier carrier, double offset_y) {
    require_same_grid(vortex.spec(), reference.spec(), "interferogram");
    if (std::abs(vortex.wavelength() - reference.wavelength()) > 1e-12 * vortex.wavelength())
        throw GridMismatchError("interferogram: vortex and reference wavelengths differ");
    const auto& s = vortex.spec();
    const double lambda = vortex.wavelength();
    if (std::abs(std::sin(carrier.angle_x)) / lambda >= 0.5 / s.dx ||
        std::abs(std::sin(carrier.angle_y)) / lambda >= 0.5 / s.dy)
        throw NyquistError("interferogram carrier exceeds the Nyquist frequency of the grid");

    const std::vector<Complex> ref = offset_y == 0.0 ? reference.values() : translated_y(reference, offset_y);
    const double kx = kTwoPi * std::sin(carrier.angle_x) / lambda;
    const double ky = kTwoPi * std::sin(carrier.angle_y) / lambda;

    Interferogram out{s, lambda, std::vector<double>(s.size()), carrier, std::nullopt};
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) {
            const auto n = s.index(i, j);
            out.intensity[n] = std::norm(vortex.values()[n] + ref[n] * std::polar(1.0, kx * s.x(i) + ky * s.y(j)));
        }
    return out;
}

Interferogram synthesize_interferogram(const ComplexFieldGrid& vortex, const ComplexFieldGrid& reference, double tilt,
                                       double offset_y) {
    return synthesize_interferogram(vortex, reference, Carrier{tilt, 0.0}, offset_y);
}

Demodulation demodulate(const Interferogram& gram, const ExtractOptions& options) {
    const auto& s = gram.spec;
    s.validate();
    if (gram.intensity.size() != s.size()) throw std::invalid_argument("interferogram size does not match its grid");
    const double dfx = 1.0 / (s.nx * s.dx);
    const double dfy = 1.0 / (s.ny * s.dy);

    std::vector<Complex> F(gram.intensity.begin(), gram.intensity.end());
    fft::transform_2d(F, s.nx, s.ny, fft::Direction::Forward);

    Demodulation out;
    std::array<double, 2> fc{};
    if (gram.carrier.known() && gram.wavelength > 0.0) {
        fc = {std::sin(gram.carrier.angle_x) / gram.wavelength, std::sin(gram.carrier.angle_y) / gram.wavelength};
    } else {
        const auto bins = detect_carrier_bins(F, s);
        if (!bins) return out;
        fc = {(*bins)[0] * dfx, (*bins)[1] * dfy};
        bool flip;
        if (options.carrier_direction) {
            flip = fc[0] * (*options.carrier_direction)[0] + fc[1] * (*options.carrier_direction)[1] < 0.0;
        } else {
            flip = std::abs(fc[0]) >= std::abs(fc[1]) ? fc[0] < 0.0 : fc[1] < 0.0;
        }
        if (flip) fc = {-fc[0], -fc[1]};
    }
    const double fmag = std::hypot(fc[0], fc[1]);
    if (!(fmag > 0.0)) return out;
    out.carrier_found = true;
    out.carrier_frequency = fc;

    // The vortex * conj(reference) term rides on e^{-i 2pi fc.x}, i.e. sits at -fc.
    const double radius = 0.5 * fmag;
    std::vector<Complex> side(F.size()), base(F.size());
    for (int j = 0; j < s.ny; ++j) {
        const double fy = fft::signed_bin(j, s.ny) * dfy;
        for (int i = 0; i < s.nx; ++i) {
            const double fx = fft::signed_bin(i, s.nx) * dfx;
            const auto n = s.index(i, j);
            side[n] = F[n] * disk_taper(std::hypot(fx + fc[0], fy + fc[1]) / radius);
            base[n] = F[n] * disk_taper(std::hypot(fx, fy) / radius);
        }
    }
    fft::transform_2d(side, s.nx, s.ny, fft::Direction::Inverse);
    fft::transform_2d(base, s.nx, s.ny, fft::Direction::Inverse);

    out.cross.resize(F.size());
    out.background.resize(F.size());
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i) {
            const auto n = s.index(i, j);
            out.cross[n] = side[n] * std::polar(1.0, kTwoPi * (fc[0] * s.x(i) + fc[1] * s.y(j)));
            out.background[n] = base[n].real();
        }
    return out;
}

ChargeReading extract_charge(const Interferogram& gram, const ExtractOptions& options) {
    ChargeReading reading;
    const auto demod = demodulate(gram, options);
    if (!demod.carrier_found) {
        reading.flagged = true;
        reading.note = "no fringe carrier detected";
        return reading;
    }
    const auto& s = gram.spec;
    std::vector<double> env(demod.cross.size());
    for (std::size_t n = 0; n < env.size(); ++n) env[n] = std::abs(demod.cross[n]);
    const Core core = locate_core(env, s);
    reading.singularity = {core.cx, core.cy};
    const double radius = fit_loop_radius(s, core.cx, core.cy, core.radius);
    if (!(radius >= 2.0 * std::max(s.dx, s.dy))) {
        reading.flagged = true;
        reading.note = "integration loop does not fit on the grid";
        return reading;
    }

    const ComplexFieldGrid cross(s, gram.wavelength > 0.0 ? gram.wavelength : 1.0, demod.cross);
    const double w = phase_winding(cross, radius, core.cx, core.cy);

    // Loop quality: weakest envelope point relative to the strongest, and visibility.
    constexpr int kProbe = 128;
    double emin = std::numeric_limits<double>::infinity(), emax = 0.0, mod = 0.0, bg = 0.0;
    for (int q = 0; q < kProbe; ++q) {
        const double t = kTwoPi * q / kProbe;
        const double x = core.cx + radius * std::cos(t), y = core.cy + radius * std::sin(t);
        const double e = std::abs(cross.sample(x, y));
        emin = std::min(emin, e);
        emax = std::max(emax, e);
        mod += 2.0 * e;
        bg += sample_real(demod.background, s, x, y);
    }
    reading.visibility = bg > 0.0 ? std::clamp(mod / bg, 0.0, 1.0) : 0.0;
    const double quality = emax > 0.0 ? std::min(1.0, (emin / emax) / 0.1) : 0.0;
    const double vis_factor = std::min(1.0, reading.visibility / 0.2);

    reading.winding = w;
    reading.method = ReadingMethod::Circulation;
    if (core.singular) {
        reading.ell = static_cast<int>(std::lround(w));
        const double frac = std::abs(w - reading.ell);
        reading.confidence = std::max(0.0, 1.0 - 2.0 * frac) * quality * vis_factor;
        reading.flagged = frac > 0.25 || reading.visibility < 0.2;
        if (frac > 0.25) reading.note = "circulation is far from an integer";
    } else {
        reading.ell = 0;
        reading.confidence = std::max(0.0, 1.0 - 2.0 * std::abs(w)) * quality * vis_factor;
        reading.flagged = std::abs(w) > 0.25 || reading.visibility < 0.2;
        reading.note = "no singularity in the demodulated envelope";
    }
    if (reading.visibility < 0.2 && reading.note.empty()) reading.note = "fringe visibility below 0.2";
    return reading;
}

ChargeReading count_fork_fringes(const Interferogram& gram, const ExtractOptions& options) {
    ChargeReading reading;
    reading.method = ReadingMethod::ForkCount;
    const auto demod = demodulate(gram, options);
    if (!demod.carrier_found) {
        reading.flagged = true;
        reading.note = "no fringe carrier detected";
        return reading;
    }
    const auto& s = gram.spec;
    std::vector<double> env(demod.cross.size()), ac(demod.cross.size());
    for (std::size_t n = 0; n < env.size(); ++n) {
        env[n] = std::abs(demod.cross[n]);
        ac[n] = gram.intensity[n] - demod.background[n];
    }
    const Core core = locate_core(env, s);
    reading.singularity = {core.cx, core.cy};
    if (!core.singular) {
        reading.confidence = 0.5;
        reading.note = "no fork found";
        return reading;
    }

    const double fmag = std::hypot(demod.carrier_frequency[0], demod.carrier_frequency[1]);
    const double ux = demod.carrier_frequency[0] / fmag, uy = demod.carrier_frequency[1] / fmag;
    const double px = -uy, py = ux;  // +90 degrees from the carrier
    const double h = 0.4 * core.radius;
    const double span = 2.0 * core.radius;
    const double step = 0.25 * std::min(s.dx, s.dy);
    const int half = static_cast<int>(std::ceil(2.0 * span / step));
    const int inner = static_cast<int>(std::lround(span / step));
    const int n = 2 * half + 1;

    // Continuous fringe count along a line: unwrapped analytic-signal phase over [-span, span].
    auto fringe_phase = [&](double side) {
        std::vector<Complex> line(n);
        for (int q = 0; q < n; ++q) {
            const double t = (q - half) * step;
            line[q] = sample_real(ac, s, core.cx + side * h * px + t * ux, core.cy + side * h * py + t * uy);
        }
        fft::transform_1d(line, fft::Direction::Forward);
        for (int q = 1; q < n; ++q) {
            const int b = fft::signed_bin(q, n);
            line[q] *= b > 0 ? 2.0 : (b < 0 ? 0.0 : 1.0);
        }
        fft::transform_1d(line, fft::Direction::Inverse);
        double total = 0.0;
        for (int q = half - inner; q < half + inner; ++q) total += std::arg(line[q + 1] * std::conj(line[q]));
        return total;
    };

    const double raw = (fringe_phase(+1.0) - fringe_phase(-1.0)) / kTwoPi;
    // The two short sides of the implied rectangle hold (2/pi) atan(h/span) of the winding.
    const double w = raw / (1.0 - (2.0 / kPi) * std::atan(h / span));
    reading.winding = w;
    reading.ell = static_cast<int>(std::lround(w));
    const double frac = std::abs(w - reading.ell);
    reading.confidence = std::max(0.0, 1.0 - 2.0 * frac);
    reading.flagged = frac > 0.25;
    return reading;
}

double fringe_visibility(const Interferogram& gram, const PixelRegion& region, const ExtractOptions& options) {
    const auto& s = gram.spec;
    if (region.width <= 0 || region.height <= 0 || region.i0 < 0 || region.j0 < 0 ||
        region.i0 + region.width > s.nx || region.j0 + region.height > s.ny)
        throw std::invalid_argument("visibility region lies outside the grid");
    const auto demod = demodulate(gram, options);
    if (!demod.carrier_found) return 0.0;

    const double fmag = std::hypot(demod.carrier_frequency[0], demod.carrier_frequency[1]);
    const double extent = std::abs(region.width * s.dx * demod.carrier_frequency[0] / fmag) +
                          std::abs(region.height * s.dy * demod.carrier_frequency[1] / fmag);
    if (extent * fmag < 3.0) {
        std::ostringstream msg;
        msg << "visibility region spans " << extent * fmag << " fringe periods; need at least 3";
        throw RegionTooSmallError(msg.str());
    }
    double mod = 0.0, bg = 0.0;
    for (int j = region.j0; j < region.j0 + region.height; ++j)
        for (int i = region.i0; i < region.i0 + region.width; ++i) {
            mod += 2.0 * std::abs(demod.cross[s.index(i, j)]);
            bg += demod.background[s.index(i, j)];
        }
    return bg > 0.0 ? std::clamp(mod / bg, 0.0, 1.0) : 0.0;
}

Interferogram with_intensity_noise(const Interferogram& gram, double level, std::uint64_t seed) {
    Interferogram out = gram;
    if (level <= 0.0) return out;
    const double peak = *std::max_element(gram.intensity.begin(), gram.intensity.end());
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, level * peak);
    for (auto& v : out.intensity) v = std::max(0.0, v + noise(rng));
    return out;
}

}  // namespace ramanoam
