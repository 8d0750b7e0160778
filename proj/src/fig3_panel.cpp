#include <algorithm>
#include <cmath>
#include <exception>

#include "ramanoam/beam.hpp"
#include "ramanoam/constants.hpp"
#include "ramanoam/interferometry.hpp"

namespace ramanoam {

namespace {

// Mean of |u|^2 over the circle of radius r about the grid center.
double ring_mean_intensity(const ComplexFieldGrid& f, double r) {
    if (r <= 0.0) return std::norm(f.sample(0.0, 0.0));
    constexpr int kSamples = 256;
    double s = 0.0;
    for (int q = 0; q < kSamples; ++q) {
        const double t = kTwoPi * q / kSamples;
        s += std::norm(f.sample(r * std::cos(t), r * std::sin(t)));
    }
    return s / kSamples;
}

PanelEntry analyze_order(const RamanConfig& cfg, const PanelOptions& opt, SidebandLabel label, double distance) {
    PanelEntry entry;
    entry.label = label;
    entry.expected_ell = sideband_charge(cfg, label);
    try {
        entry.wavelength = angular_to_wavelength(sideband_frequency(cfg, label));
        const BeamParams pump_beam{opt.waist, angular_to_wavelength(cfg.omega_p)};
        const BeamParams stokes_beam{opt.waist, angular_to_wavelength(cfg.omega_s)};

        // Vortex set and reference set share the pump/Stokes beams except for their charges.
        const auto vortex_src = spatial_sideband(lg_mode_field({0, cfg.ell_p}, pump_beam, opt.grid),
                                                 lg_mode_field({0, cfg.ell_s}, stokes_beam, opt.grid), label);
        const auto reference_src = spatial_sideband(lg_mode_field({0, 0}, pump_beam, opt.grid),
                                                    lg_mode_field({0, 0}, stokes_beam, opt.grid), label);

        const auto vortex = propagate(vortex_src, distance);
        auto reference = propagate(reference_src, distance);

        entry.ring_radius = ring_radius(vortex);
        entry.vortex_intensity = vortex.intensity();

        // Best fringe contrast on the vortex ring.
        const double iv = ring_mean_intensity(vortex, entry.ring_radius);
        const double ir = ring_mean_intensity(reference, entry.ring_radius);
        if (ir > 0.0 && iv > 0.0) reference *= std::sqrt(iv / ir);

        auto gram = synthesize_interferogram(vortex, reference, Carrier{0.0, opt.tilt}, opt.offset_y);
        gram.label = label;
        if (opt.noise > 0.0)
            gram = with_intensity_noise(gram, opt.noise, opt.seed + static_cast<std::uint64_t>(label.ladder_index() + 1024));
        entry.reading = extract_charge(gram);
        entry.interferogram = std::move(gram);
    } catch (const std::exception& e) {
        entry.error = e.what();
    }
    return entry;
}

}  // namespace

std::vector<PanelEntry> analyze_fig3_panel(const RamanConfig& cfg, const PanelOptions& options,
                                           const std::vector<SidebandLabel>& orders) {
    cfg.validate();
    options.grid.validate();
    const double distance = options.observation_distance.value_or(
        BeamParams{options.waist, angular_to_wavelength(cfg.omega_p)}.rayleigh_range());

    std::vector<PanelEntry> out;
    out.reserve(orders.size());
    for (const auto& label : orders) out.push_back(analyze_order(cfg, options, label, distance));
    return out;
}

}  // namespace ramanoam
