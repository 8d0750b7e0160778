#pragma once

#include <compare>
#include <map>
#include <span>

#include "ramanoam/field.hpp"

namespace ramanoam {

// Radial (p) and azimuthal (ell) labels of a Laguerre-Gaussian mode.
struct LGModeIndex {
    int p = 0;
    int ell = 0;
    auto operator<=>(const LGModeIndex&) const = default;
};

struct BeamParams {
    double waist_w0 = 0.0;    // 1/e^2-intensity radius at focus, m
    double wavelength = 0.0;  // m

    void validate() const;
    double rayleigh_range() const;
    double width_at(double z) const;
};

// Normalized LG_p^ell at distance z from the waist, phase factor e^{+i ell theta}.
// Fields are paraxial envelopes: the e^{ikz} carrier is not included.
// Throws ResolutionError when w0 < 4 samples.
ComplexFieldGrid lg_mode_field(LGModeIndex index, const BeamParams& beam, const GridSpec& spec, double z = 0.0);

struct ModeDecomposition {
    std::map<LGModeIndex, Complex> coefficients;
    double field_power = 0.0;
    double captured_power = 0.0;

    // Basis captured less than 95% of the field power.
    bool truncated() const { return captured_power < 0.95 * field_power; }
    double column_power(int ell) const;
    Complex coefficient(int p, int ell) const;
};

// Overlap coefficients c_{p,ell} = <LG_p^ell | field> for 0 <= p <= p_max and
// ell in [ell_min, ell_max], with the basis evaluated at distance z from its waist.
ModeDecomposition decompose(const ComplexFieldGrid& field, const BeamParams& beam, int p_max, int ell_min,
                            int ell_max, double z = 0.0);

// Angular-spectrum free-space propagation over `distance` (may be negative).
// Throws AliasingError if the field has spectral content the transfer function
// cannot represent on this grid at this distance.
ComplexFieldGrid propagate(const ComplexFieldGrid& field, double distance);

// Location of the maximum of the azimuthally averaged profile of `image`
// about (cx, cy), quadratic sub-bin interpolation. Returns 0 when the
// profile peaks in the central bin.
double radial_profile_peak(std::span<const double> image, const GridSpec& spec, double cx = 0.0, double cy = 0.0);

// Radius of the azimuthally averaged intensity maximum about the grid center.
double ring_radius(const ComplexFieldGrid& field);

// Phase circulation / 2pi along a circle; not rounded.
double phase_winding(const ComplexFieldGrid& field, double loop_radius, double cx = 0.0, double cy = 0.0);

// Nearest integer to phase_winding about the grid center. Throws AmbiguityError
// if the winding is more than 0.25 from an integer, std::invalid_argument if
// the loop leaves the grid.
int measure_charge_circulation(const ComplexFieldGrid& field, double loop_radius);

}  // namespace ramanoam
