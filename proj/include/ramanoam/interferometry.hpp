#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramanoam/field.hpp"
#include "ramanoam/raman.hpp"

namespace ramanoam {

// Relative tilt of the reference wave, radians. Zero on both axes means unknown.
struct Carrier {
    double angle_x = 0.0;
    double angle_y = 0.0;

    bool known() const { return angle_x != 0.0 || angle_y != 0.0; }
    Carrier flipped() const { return {-angle_x, -angle_y}; }
};

struct Interferogram {
    GridSpec spec;
    double wavelength = 0.0;  // 0 when unknown (e.g. loaded from an image)
    std::vector<double> intensity;
    Carrier carrier;
    std::optional<SidebandLabel> label;
};

enum class ReadingMethod { Circulation, ForkCount };
const char* to_string(ReadingMethod m);

struct ChargeReading {
    int ell = 0;
    double confidence = 0.0;  // [0, 1]
    ReadingMethod method = ReadingMethod::Circulation;
    bool flagged = false;     // ambiguous or weak; do not trust ell
    double winding = 0.0;     // unrounded measurement
    double visibility = 0.0;  // fringe visibility along the integration loop
    std::array<double, 2> singularity{0.0, 0.0};  // m, grid-centered
    std::string note;
};

// |vortex + T(reference) e^{i k (x sin ax + y sin ay)}|^2, where T translates the
// reference by offset_y (exact Fourier shift, periodic). Throws
// GridMismatchError on grid or wavelength mismatch, NyquistError if the
// carrier cannot be sampled.
Interferogram synthesize_interferogram(const ComplexFieldGrid& vortex, const ComplexFieldGrid& reference,
                                       Carrier carrier, double offset_y = 0.0);
// Carrier tilt along x.
Interferogram synthesize_interferogram(const ComplexFieldGrid& vortex, const ComplexFieldGrid& reference,
                                       double tilt, double offset_y = 0.0);

struct ExtractOptions {
    // Used when the interferogram carries no carrier metadata: the detected
    // carrier is taken on the side of this direction. Without a hint the
    // carrier is taken along +x or +y, whichever component dominates.
    std::optional<std::array<double, 2>> carrier_direction;
};

// Result of isolating the cross term of an interferogram.
struct Demodulation {
    bool carrier_found = false;
    std::array<double, 2> carrier_frequency{0.0, 0.0};  // cycles per m
    std::vector<Complex> cross;      // vortex * conj(reference), carrier removed
    std::vector<double> background;  // |vortex|^2 + |reference|^2
};

Demodulation demodulate(const Interferogram& gram, const ExtractOptions& options = {});

// Signed charge difference (vortex minus reference) by Fourier demodulation and
// phase circulation around the detected singularity. With the carrier
// direction fixed, a fork opening toward +carrier reads positive.
ChargeReading extract_charge(const Interferogram& gram, const ExtractOptions& options = {});

// Cross-check reading: counts fringes along two lines parallel to the carrier,
// on either side of the core, and takes the difference.
ChargeReading count_fork_fringes(const Interferogram& gram, const ExtractOptions& options = {});

struct PixelRegion {
    int i0 = 0;
    int j0 = 0;
    int width = 0;
    int height = 0;
};

// (Imax - Imin) / (Imax + Imin) of the demodulated envelope over a region.
// Throws RegionTooSmallError unless the region spans >= 3 fringe periods.
double fringe_visibility(const Interferogram& gram, const PixelRegion& region, const ExtractOptions& options = {});

// Deterministic additive white noise, sigma = level * max intensity, clipped at 0.
Interferogram with_intensity_noise(const Interferogram& gram, double level, std::uint64_t seed);

// Simulated Fig. 3 style panel: vortex-set and reference-set sidebands of one
// order, viewed at the detection plane.
struct PanelOptions {
    GridSpec grid;
    double waist = 0.0;                 // pump/Stokes waist at the crystal, m
    double tilt = 0.0262;               // carrier angle between the two sets at the screen (along y), rad
    std::optional<double> observation_distance;  // crystal to detection plane, m; default one pump Rayleigh range
    double offset_y = 0.0;              // residual reference displacement at the screen, m
    double noise = 0.0;                 // intensity noise level, fraction of peak
    std::uint64_t seed = 0;
};

struct PanelEntry {
    SidebandLabel label = SidebandLabel::pump();
    int expected_ell = 0;
    double wavelength = 0.0;
    std::optional<ChargeReading> reading;
    std::string error;                    // non-empty if this order failed
    std::vector<double> vortex_intensity;  // detection-plane |vortex|^2
    std::optional<Interferogram> interferogram;
    double ring_radius = 0.0;             // of the vortex sideband at the detection plane
};

// Per order: spatial sideband of the vortex set (cfg charges) and of the
// ell = 0 reference set, both propagated to the detection plane, reference
// scaled for best contrast at the vortex ring, interfered, then read back.
// Failures are recorded per order; entries follow the order of `orders`.
std::vector<PanelEntry> analyze_fig3_panel(const RamanConfig& cfg, const PanelOptions& options,
                                           const std::vector<SidebandLabel>& orders);

}  // namespace ramanoam
